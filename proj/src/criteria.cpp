#include "asq/criteria.hpp"

#include <cmath>

namespace asq {

namespace {
constexpr double kSpectrumSlack = 1e-12;
}

double as_lhs(const RealVector& eigs) {
    const Eigen::Index n = eigs.size();
    if (n < 4)
        throw BadSpectrumError("as_lhs: need at least 4 eigenvalues (2xd with d >= 2)");
    for (Eigen::Index i = 0; i + 1 < n; ++i)
        if (eigs(i) < eigs(i + 1) - kSpectrumSlack)
            throw BadSpectrumError("as_lhs: spectrum is not non-increasing");
    if (eigs(n - 1) < -kSpectrumSlack)
        throw BadSpectrumError("as_lhs: negative eigenvalue beyond tolerance");
    auto clamp0 = [](double x) { return x <= kSpectrumSlack ? 0.0 : x; };
    return eigs(0) - eigs(n - 2) - 2.0 * std::sqrt(clamp0(eigs(n - 3)) * clamp0(eigs(n - 1)));
}

SpectrumReport is_absolutely_separable(const DensityMatrix& rho, double boundary_tol) {
    SpectrumReport report;
    report.eigenvalues = eig_hermitian_desc(rho.mat);
    report.as_lhs = as_lhs(report.eigenvalues);
    if (report.as_lhs > boundary_tol)
        report.verdict = AsVerdict::not_AS;
    else if (report.as_lhs < -boundary_tol)
        report.verdict = AsVerdict::AS_interior;
    else
        report.verdict = AsVerdict::AS_boundary;
    return report;
}

PptReport is_ppt(const DensityMatrix& rho) {
    RealVector ev = eig_hermitian_desc(partial_transpose_B(rho.mat, rho.dims));
    const double min_ev = ev(ev.size() - 1);
    return PptReport{min_ev >= -kPptTol, min_ev};
}

StateLabel classify(const DensityMatrix& rho, double boundary_tol) {
    SpectrumReport spec = is_absolutely_separable(rho, boundary_tol);
    if (spec.verdict == AsVerdict::AS_boundary) return StateLabel::AS_boundary;
    if (spec.verdict == AsVerdict::AS_interior) return StateLabel::AS;
    return is_ppt(rho).ppt ? StateLabel::PPT_not_AS : StateLabel::NPT_entangled;
}

std::string label_name(StateLabel label, const BipartiteDims& dims) {
    const bool ppt_decides = dims.dA * dims.dB <= 6;
    switch (label) {
        case StateLabel::NPT_entangled: return ppt_decides ? "NPT_entangled" : "NPT";
        case StateLabel::PPT_not_AS: return "PPT_not_AS";
        case StateLabel::AS: return "AS";
        case StateLabel::AS_boundary: return "AS_boundary";
    }
    return "unknown";
}

std::string verdict_name(AsVerdict v) {
    switch (v) {
        case AsVerdict::AS_interior: return "AS_interior";
        case AsVerdict::AS_boundary: return "AS_boundary";
        case AsVerdict::not_AS: return "not_AS";
    }
    return "unknown";
}

}  // namespace asq

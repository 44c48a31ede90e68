#include "asq/states.hpp"

#include <cmath>

namespace asq {

namespace {
constexpr double kValidityTol = 1e-8;
constexpr double kProbSlack = 1e-12;
}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, BipartiteDims d) : mat(std::move(m)), dims(d) {
    if (mat.rows() != dims.total() || mat.cols() != dims.total())
        throw DimensionMismatchError("DensityMatrix: matrix does not match dA*dB");
    if (hermiticity_defect(mat) > kValidityTol)
        throw InvalidStateError("DensityMatrix: not Hermitian");
    if (std::abs(mat.trace().real() - 1.0) > kValidityTol || std::abs(mat.trace().imag()) > kValidityTol)
        throw InvalidStateError("DensityMatrix: trace is not 1");
    RealVector ev = eig_hermitian_desc(mat, kValidityTol);
    if (ev(ev.size() - 1) < -kValidityTol)
        throw InvalidStateError("DensityMatrix: negative eigenvalue");
}

DensityMatrix boundary_rank3() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0 / 3.0;
    return DensityMatrix(std::move(m), {2, 2});
}

DensityMatrix modified_werner(const WernerParams& params) {
    if (params.p < 0.0 || params.p > 1.0)
        throw ParamOutOfRangeError("modified_werner: p outside [0, 1]");
    if (params.gamma < 0.0 || params.gamma > M_PI)
        throw ParamOutOfRangeError("modified_werner: gamma outside [0, pi]");
    if (params.phi < 0.0 || params.phi > 2.0 * M_PI)
        throw ParamOutOfRangeError("modified_werner: phi outside [0, 2pi]");
    Eigen::Vector4cd xi = Eigen::Vector4cd::Zero();
    xi(0) = std::cos(params.gamma);
    xi(3) = std::polar(std::sin(params.gamma), params.phi);
    ComplexMatrix m = params.p * (xi * xi.adjoint()) +
                      (1.0 - params.p) / 4.0 * ComplexMatrix::Identity(4, 4);
    return DensityMatrix(std::move(m), {2, 2});
}

Eigen::Vector4cd bell_vector(int which) {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    switch (which) {
        case 0: v(0) = s; v(3) = s; break;   // phi+
        case 1: v(0) = s; v(3) = -s; break;  // phi-
        case 2: v(1) = s; v(2) = s; break;   // psi+
        case 3: v(1) = s; v(2) = -s; break;  // psi-
        default: throw ParamOutOfRangeError("bell_vector: index must be 0..3");
    }
    return v;
}

DensityMatrix bd_from_probs(double p1, double p2, double p3, double p4) {
    const double probs[4] = {p1, p2, p3, p4};
    double sum = 0.0;
    for (double p : probs) {
        if (p < -kProbSlack)
            throw InvalidStateError("bd_from_probs: negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw InvalidStateError("bd_from_probs: probabilities do not sum to 1");
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        Eigen::Vector4cd v = bell_vector(i);
        m += std::max(probs[i], 0.0) * (v * v.adjoint());
    }
    m /= m.trace().real();
    return DensityMatrix(std::move(m), {2, 2});
}

std::array<double, 4> bd_probs_from_correlations(double c1, double c2, double c3) {
    return {(1.0 + c1 - c2 + c3) / 4.0, (1.0 + c1 + c2 - c3) / 4.0,
            (1.0 - c1 + c2 + c3) / 4.0, (1.0 - c1 - c2 - c3) / 4.0};
}

DensityMatrix bd_from_correlations(double c1, double c2, double c3) {
    auto p = bd_probs_from_correlations(c1, c2, c3);
    for (double pi : p)
        if (pi < -kProbSlack)
            throw InvalidStateError("bd_from_correlations: correlations give a negative probability");
    return bd_from_probs(p[0], p[1], p[2], p[3]);
}

DensityMatrix bd_alpha_family(double alpha) {
    if (alpha < 1.0 / 6.0 - kProbSlack || alpha > 0.5 + kProbSlack)
        throw ParamOutOfRangeError("bd_alpha_family: alpha outside [1/6, 1/2]");
    return bd_from_probs(3.0 * alpha - 0.5, 0.5 - alpha, 0.5 - alpha, 0.5 - alpha);
}

DensityMatrix maximally_mixed(const BipartiteDims& dims) {
    const Eigen::Index n = dims.total();
    return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(n), dims);
}

}  // namespace asq

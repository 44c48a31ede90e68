#include "asq/quantum_switch.hpp"

#include <cmath>

namespace asq {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus) : ops(std::move(kraus)) {
    if (ops.empty())
        throw InvalidChannelError("KrausChannel: no Kraus operators");
    const Eigen::Index n = ops.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (const auto& k : ops) {
        if (k.rows() != n || k.cols() != n)
            throw InvalidChannelError("KrausChannel: inconsistent operator dimensions");
        sum += k.adjoint() * k;
    }
    if ((sum - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
        throw InvalidChannelError("KrausChannel: completeness relation violated");
}

ControlState::ControlState(Complex a_, Complex b_) : a(a_), b(b_) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12)
        throw InvalidStateError("ControlState: amplitudes are not normalized");
}

ComplexMatrix switch_joint(const KrausChannel& ch1, const KrausChannel& ch2,
                           const DensityMatrix& rho, const ControlState& control) {
    const Eigen::Index n = rho.dim();
    if (ch1.dim() != n || ch2.dim() != n)
        throw DimensionMismatchError("switch_joint: channel dimension does not match state");
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    ComplexMatrix ctrl(2, 2);
    ctrl << std::norm(control.a), control.a * std::conj(control.b),
            control.b * std::conj(control.a), std::norm(control.b);
    ComplexMatrix input = kron(rho.mat, ctrl);
    ComplexMatrix out = ComplexMatrix::Zero(2 * n, 2 * n);
    for (const auto& k1 : ch1.ops) {
        for (const auto& k2 : ch2.ops) {
            ComplexMatrix w = kron(k1 * k2, p0) + kron(k2 * k1, p1);
            out += w * input * w.adjoint();
        }
    }
    return out;
}

SwitchOutcome measure_control(const ComplexMatrix& joint, const BipartiteDims& sys_dims,
                              Branch branch) {
    const Eigen::Index n = sys_dims.total();
    if (joint.rows() != 2 * n || joint.cols() != 2 * n)
        throw DimensionMismatchError("measure_control: joint matrix is not system x qubit");
    const double sign = branch == Branch::plus ? 1.0 : -1.0;
    const double s[2] = {1.0 / std::numbers::sqrt2, sign / std::numbers::sqrt2};
    ComplexMatrix projected(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) {
            Complex v = 0.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    v += s[a] * s[b] * joint(2 * r + a, 2 * c + b);
            projected(r, c) = v;
        }
    const double prob = projected.trace().real();
    if (prob < kZeroProbTol)
        throw ZeroProbabilityBranchError("measure_control: branch probability below 1e-12");
    projected /= prob;
    return SwitchOutcome{DensityMatrix(std::move(projected), sys_dims), prob, branch};
}

SwitchOutcome switch_unitary_closed(const UnitaryMatrix& u1, const UnitaryMatrix& u2,
                                    const DensityMatrix& rho, Branch branch) {
    const Eigen::Index n = rho.dim();
    if (u1.dim() != n || u2.dim() != n)
        throw DimensionMismatchError("switch_unitary_closed: unitary dimension does not match state");
    ComplexMatrix l;
    if (branch == Branch::plus)
        l = 0.5 * (u1.mat * u2.mat + u2.mat * u1.mat);
    else
        l = 0.5 * (u1.mat * u2.mat - u2.mat * u1.mat);
    ComplexMatrix num = l * rho.mat * l.adjoint();
    const double prob = num.trace().real();
    if (prob < kZeroProbTol)
        throw ZeroProbabilityBranchError("switch_unitary_closed: branch probability below 1e-12");
    num /= prob;
    return SwitchOutcome{DensityMatrix(std::move(num), rho.dims), prob, branch};
}

}  // namespace asq

#pragma once

#include <numbers>
#include <vector>

#include "asq/states.hpp"
#include "asq/unitaries.hpp"

namespace asq {

// Kraus decomposition of a channel on an n-dimensional system;
// sum_i K_i^dag K_i = I within 1e-10, checked on construction.
struct KrausChannel {
    std::vector<ComplexMatrix> ops;

    explicit KrausChannel(std::vector<ComplexMatrix> kraus);

    Eigen::Index dim() const { return ops.front().rows(); }

    static KrausChannel from_unitary(const UnitaryMatrix& u) {
        return KrausChannel({u.mat});
    }
};

// Pure control qubit a|0> + b|1>; defaults to |+>.
struct ControlState {
    Complex a{1.0 / std::numbers::sqrt2, 0.0};
    Complex b{1.0 / std::numbers::sqrt2, 0.0};

    ControlState() = default;
    ControlState(Complex a_, Complex b_);
};

enum class Branch { plus, minus };

struct SwitchOutcome {
    DensityMatrix state;
    double probability = 0.0;
    Branch branch = Branch::plus;
};

inline constexpr double kZeroProbTol = 1e-12;

// Joint system (x) control state after the switch of the two channels:
//   sum_ij W_ij (rho (x) |c><c|) W_ij^dag,
//   W_ij = K_i^(1) K_j^(2) (x) |0><0| + K_j^(2) K_i^(1) (x) |1><1|.
// The control qubit is the trailing tensor factor.
ComplexMatrix switch_joint(const KrausChannel& ch1, const KrausChannel& ch2,
                           const DensityMatrix& rho, const ControlState& control = {});

// Project the trailing control qubit of `joint` onto |+> or |-> and
// renormalize. `sys_dims` tags the system part of the result. Throws
// ZeroProbabilityBranchError when the branch probability is below 1e-12.
SwitchOutcome measure_control(const ComplexMatrix& joint, const BipartiteDims& sys_dims,
                              Branch branch);

// Closed form for two unitary channels and a |+> control:
//   plus branch  L = (U1 U2 + U2 U1)/2,
//   minus branch L = (U1 U2 - U2 U1)/2,
//   probability Tr[L rho L^dag], state L rho L^dag / probability.
SwitchOutcome switch_unitary_closed(const UnitaryMatrix& u1, const UnitaryMatrix& u2,
                                    const DensityMatrix& rho, Branch branch);

}  // namespace asq

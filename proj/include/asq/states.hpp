#pragma once

#include <array>

#include "asq/linalg.hpp"

namespace asq {

// Hermitian, unit-trace, positive-semidefinite matrix tagged with its
// bipartite dimensions. Validation tolerances: Hermiticity 1e-8 absolute,
// trace 1e-8, minimum eigenvalue >= -1e-8 (constructor inputs are assumed
// to carry at most mild round-off).
struct DensityMatrix {
    ComplexMatrix mat;
    BipartiteDims dims;

    DensityMatrix(ComplexMatrix m, BipartiteDims d);

    Eigen::Index dim() const { return mat.rows(); }
};

struct WernerParams {
    double p = 0.0;       // mixing weight, [0, 1]
    double gamma = 0.0;   // pure-state angle, [0, pi]
    double phi = 0.0;     // relative phase, [0, 2pi]
};

// Basis ordering is |00>, |01>, |10>, |11> (A first) throughout.

// The rank-3 state diag(1/3, 1/3, 1/3, 0), which sits on the boundary of
// the absolutely separable set in 2x2.
DensityMatrix boundary_rank3();

// p |xi><xi| + (1-p)/4 I with |xi> = cos(gamma)|00> + e^{i phi} sin(gamma)|11>.
DensityMatrix modified_werner(const WernerParams& params);

// Bell-diagonal state sum_i p_i |bell_i><bell_i| in the order
// phi+, phi-, psi+, psi-.
DensityMatrix bd_from_probs(double p1, double p2, double p3, double p4);

// (1/4)(I + sum_i c_i sigma_i x sigma_i); throws InvalidStateError if any
// derived mixing probability is negative beyond 1e-12 slack.
DensityMatrix bd_from_correlations(double c1, double c2, double c3);

// Mixing probabilities of bd_from_correlations in phi+, phi-, psi+, psi- order.
std::array<double, 4> bd_probs_from_correlations(double c1, double c2, double c3);

// One-parameter Bell-diagonal family p1 = 3a - 1/2, p2 = p3 = p4 = 1/2 - a,
// alpha in [1/6, 1/2].
DensityMatrix bd_alpha_family(double alpha);

// I/(dA*dB).
DensityMatrix maximally_mixed(const BipartiteDims& dims);

// Bell vectors with the sign convention phi± = (|00> ± |11>)/sqrt2,
// psi± = (|01> ± |10>)/sqrt2.
Eigen::Vector4cd bell_vector(int which);  // 0: phi+, 1: phi-, 2: psi+, 3: psi-

}  // namespace asq

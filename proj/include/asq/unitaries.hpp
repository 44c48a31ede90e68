#pragma once

#include <cstdint>
#include <string_view>

#include "asq/linalg.hpp"

namespace asq {

struct RngSeed {
    std::uint64_t value = 0;
};

// Name of the sampler construction, echoed into run manifests.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/ginibre-qr-phase-corrected";

// Square matrix with ||U^dag U - I||_max < 1e-10, checked on construction.
struct UnitaryMatrix {
    ComplexMatrix mat;

    explicit UnitaryMatrix(ComplexMatrix m);

    Eigen::Index dim() const { return mat.rows(); }
};

// The 4x4 CNOT gate (control on A, basis |00>,|01>,|10>,|11>).
UnitaryMatrix cnot();

// The real symmetric unitary
//   [ cos t   0      0     sin t ]
//   [  0     cos t  sin t   0    ]
//   [  0     sin t -cos t   0    ]
//   [ sin t   0      0    -cos t ]
UnitaryMatrix u_theta(double theta);

// Haar-uniform n x n unitary: Ginibre matrix, QR, then each column of Q
// multiplied by the phase of the corresponding diagonal entry of R. Plain
// QR of a Gaussian matrix is not Haar without this correction.
UnitaryMatrix haar_random(Eigen::Index n, RngSeed seed);

// Deterministic per-draw sub-seed so parallel scans indexed by `index`
// are order-independent.
RngSeed derive_seed(RngSeed seed, std::uint64_t index);

}  // namespace asq

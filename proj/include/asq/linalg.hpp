#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "asq/errors.hpp"

namespace asq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Dimensions of a bipartite system H_A (dim dA) tensor H_B (dim dB).
struct BipartiteDims {
    Eigen::Index dA = 2;
    Eigen::Index dB = 2;

    Eigen::Index total() const { return dA * dB; }
};

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kDefaultRankTol = 1e-9;

// Kronecker product; dims multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Conjugate transpose.
inline ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

// Max-absolute-entry deviation from Hermiticity.
double hermiticity_defect(const ComplexMatrix& h);

// Eigenvalues of a Hermitian matrix, sorted descending. The input is
// symmetrized as (H + H^dag)/2 before decomposition to remove round-off
// drift; throws NotHermitianError if the defect exceeds `tol`.
RealVector eig_hermitian_desc(const ComplexMatrix& h, double tol = kHermitianTol);

// Partial transpose over the B subsystem: each dB x dB block is transposed
// in place. Throws DimensionMismatchError if the matrix is not dA*dB square.
ComplexMatrix partial_transpose_B(const ComplexMatrix& rho, const BipartiteDims& dims);

// Number of eigenvalues strictly greater than `tol` of a Hermitian matrix.
Eigen::Index rank_with_tol(const ComplexMatrix& m, double tol = kDefaultRankTol);

}  // namespace asq

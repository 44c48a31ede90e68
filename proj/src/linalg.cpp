#include "asq/linalg.hpp"

#include <algorithm>

namespace asq {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double hermiticity_defect(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) return std::numeric_limits<double>::infinity();
    return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

RealVector eig_hermitian_desc(const ComplexMatrix& h, double tol) {
    if (h.rows() != h.cols())
        throw DimensionMismatchError("eig_hermitian_desc: matrix is not square");
    if (hermiticity_defect(h) > tol)
        throw NotHermitianError("eig_hermitian_desc: Hermiticity defect exceeds tolerance");
    ComplexMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    RealVector ev = solver.eigenvalues();
    std::sort(ev.data(), ev.data() + ev.size(), std::greater<double>());
    return ev;
}

ComplexMatrix partial_transpose_B(const ComplexMatrix& rho, const BipartiteDims& dims) {
    const Eigen::Index n = dims.total();
    if (rho.rows() != n || rho.cols() != n)
        throw DimensionMismatchError("partial_transpose_B: matrix does not match dA*dB");
    ComplexMatrix out(n, n);
    for (Eigen::Index i = 0; i < dims.dA; ++i)
        for (Eigen::Index j = 0; j < dims.dA; ++j)
            out.block(i * dims.dB, j * dims.dB, dims.dB, dims.dB) =
                rho.block(i * dims.dB, j * dims.dB, dims.dB, dims.dB).transpose();
    return out;
}

Eigen::Index rank_with_tol(const ComplexMatrix& m, double tol) {
    RealVector ev = eig_hermitian_desc(m);
    return std::count_if(ev.data(), ev.data() + ev.size(),
                         [tol](double x) { return x > tol; });
}

}  // namespace asq

#include "asq/unitaries.hpp"

#include <cmath>
#include <random>

namespace asq {

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : mat(std::move(m)) {
    if (mat.rows() != mat.cols())
        throw DimensionMismatchError("UnitaryMatrix: not square");
    const Eigen::Index n = mat.rows();
    double defect = (mat.adjoint() * mat - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (defect > 1e-10)
        throw InvalidStateError("UnitaryMatrix: U^dag U deviates from identity");
}

UnitaryMatrix cnot() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
    return UnitaryMatrix(std::move(m));
}

UnitaryMatrix u_theta(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = c;  m(0, 3) = s;
    m(1, 1) = c;  m(1, 2) = s;
    m(2, 1) = s;  m(2, 2) = -c;
    m(3, 0) = s;  m(3, 3) = -c;
    return UnitaryMatrix(std::move(m));
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace

RngSeed derive_seed(RngSeed seed, std::uint64_t index) {
    return RngSeed{splitmix64(seed.value ^ splitmix64(index + 1))};
}

UnitaryMatrix haar_random(Eigen::Index n, RngSeed seed) {
    if (n < 2)
        throw ParamOutOfRangeError("haar_random: dimension must be >= 2");
    std::mt19937_64 rng(seed.value);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            g(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        Complex d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return UnitaryMatrix(std::move(q));
}

}  // namespace asq

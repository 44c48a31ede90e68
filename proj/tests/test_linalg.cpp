#include <doctest.h>

#include "asq/quantum_switch.hpp"
#include "test_helpers.hpp"

using namespace asq;
using namespace asq::test;

TEST_CASE("kron identity and basis action") {
    ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::Identity(4, 4)) == 0.0);

    // (sigma_x x I)|00> = |10>
    Eigen::Vector4cd e00 = Eigen::Vector4cd::Zero();
    e00(0) = 1.0;
    Eigen::Vector4cd out = kron(pauli(1), i2) * e00;
    CHECK(std::abs(out(2) - 1.0) < 1e-15);
    CHECK(out.norm() == doctest::Approx(1.0));
}

TEST_CASE("kron mixed-product rule against direct multiplication") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        ComplexMatrix a = random_complex(2, 2, rng), b = random_complex(2, 2, rng);
        ComplexMatrix c = random_complex(2, 2, rng), d = random_complex(2, 2, rng);
        CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
    }
}

TEST_CASE("kron associativity and bilinearity") {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 10; ++rep) {
        ComplexMatrix a = random_complex(2, 3, rng), b = random_complex(3, 2, rng),
                      c = random_complex(2, 2, rng), a2 = random_complex(2, 3, rng);
        CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
        Complex alpha(0.3, -1.1);
        CHECK(max_abs_diff(kron(alpha * a + a2, b), alpha * kron(a, b) + kron(a2, b)) < 1e-12);
    }
}

TEST_CASE("dagger basics") {
    CHECK(max_abs_diff(dagger(ComplexMatrix::Identity(3, 3)), ComplexMatrix::Identity(3, 3)) == 0.0);
    std::mt19937_64 rng(9);
    ComplexMatrix a = random_complex(4, 4, rng);
    CHECK(max_abs_diff(dagger(dagger(a)), a) == 0.0);
    // u_theta is real symmetric, so its own adjoint
    ComplexMatrix u = u_theta(0.7).mat;
    CHECK(max_abs_diff(dagger(u), u) < 1e-15);
}

TEST_CASE("eig_hermitian_desc on known spectra") {
    RealVector ev = eig_hermitian_desc(ComplexMatrix::Identity(4, 4) / 4.0);
    for (int i = 0; i < 4; ++i) CHECK(ev(i) == doctest::Approx(0.25).epsilon(1e-12));

    const double p = 0.37;
    RealVector wev = eig_hermitian_desc(modified_werner({p, 0.9, 2.0}).mat);
    CHECK(wev(0) == doctest::Approx((1 + 3 * p) / 4).epsilon(1e-12));
    for (int i = 1; i < 4; ++i) CHECK(wev(i) == doctest::Approx((1 - p) / 4).epsilon(1e-12));
}

TEST_CASE("eig_hermitian_desc roots satisfy the characteristic polynomial") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        ComplexMatrix h = random_hermitian(4, rng);
        RealVector ev = eig_hermitian_desc(h);
        const double scale = std::pow(std::max(1.0, h.cwiseAbs().maxCoeff()), 4);
        for (int i = 0; i < 4; ++i) {
            Complex det = (h - ev(i) * ComplexMatrix::Identity(4, 4)).determinant();
            CHECK(std::abs(det) < 1e-10 * scale);
        }
        CHECK(ev.sum() == doctest::Approx(h.trace().real()).epsilon(1e-10));
        for (int i = 0; i + 1 < 4; ++i) CHECK(ev(i) >= ev(i + 1));
    }
}

TEST_CASE("eig_hermitian_desc rejects non-Hermitian input") {
    ComplexMatrix m(2, 2);
    m << 0, 1, 0, 0;
    CHECK_THROWS_AS(eig_hermitian_desc(m), NotHermitianError);
}

TEST_CASE("partial transpose of product states keeps the spectrum") {
    std::mt19937_64 rng(13);
    DensityMatrix a = random_density({1, 2}, rng);
    DensityMatrix b = random_density({1, 3}, rng);
    ComplexMatrix prod = kron(a.mat, b.mat);
    BipartiteDims dims{2, 3};
    ComplexMatrix pt = partial_transpose_B(prod, dims);
    CHECK(max_abs_diff(pt, kron(a.mat, b.mat.transpose())) < 1e-15);
    RealVector ev1 = eig_hermitian_desc(prod);
    RealVector ev2 = eig_hermitian_desc(pt);
    CHECK((ev1 - ev2).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial transpose of the Bell state has eigenvalue -1/2") {
    Eigen::Vector4cd phi = bell_vector(0);
    ComplexMatrix rho = phi * phi.adjoint();
    RealVector ev = eig_hermitian_desc(partial_transpose_B(rho, {2, 2}));
    CHECK(ev(3) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("partial transpose is a trace-preserving involution") {
    std::mt19937_64 rng(17);
    BipartiteDims dims{2, 3};
    for (int rep = 0; rep < 10; ++rep) {
        DensityMatrix rho = random_density(dims, rng);
        ComplexMatrix pt = partial_transpose_B(rho.mat, dims);
        CHECK(max_abs_diff(partial_transpose_B(pt, dims), rho.mat) == 0.0);
        CHECK(pt.trace().real() == doctest::Approx(1.0).epsilon(1e-15));
    }
    ComplexMatrix id4 = ComplexMatrix::Identity(4, 4) / 4.0;
    CHECK(max_abs_diff(partial_transpose_B(id4, {2, 2}), id4) == 0.0);
    CHECK_THROWS_AS(partial_transpose_B(ComplexMatrix::Identity(5, 5), BipartiteDims{2, 2}),
                    DimensionMismatchError);
}

TEST_CASE("rank_with_tol") {
    CHECK(rank_with_tol(boundary_rank3().mat) == 3);
    CHECK(rank_with_tol(ComplexMatrix::Identity(4, 4) / 4.0) == 4);
    // Werner state after the theta = pi/2 switch drops to rank 2
    SwitchOutcome res = switch_unitary_closed(cnot(), u_theta(M_PI / 2),
                                              modified_werner({0.15, M_PI / 4, 0.0}), Branch::plus);
    CHECK(rank_with_tol(res.state.mat) == 2);
}

TEST_CASE("rank plus nullity equals dimension for random low-rank states") {
    std::mt19937_64 rng(19);
    for (Eigen::Index r = 1; r <= 4; ++r) {
        DensityMatrix rho = random_density_rank({2, 2}, r, rng);
        RealVector ev = eig_hermitian_desc(rho.mat);
        Eigen::Index nullity = 0;
        for (Eigen::Index i = 0; i < 4; ++i)
            if (ev(i) <= kDefaultRankTol) ++nullity;
        CHECK(rank_with_tol(rho.mat) + nullity == 4);
        CHECK(rank_with_tol(rho.mat) == r);
    }
}

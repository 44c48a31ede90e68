#include <doctest.h>

#include "asq/criteria.hpp"
#include "test_helpers.hpp"

using namespace asq;
using namespace asq::test;

namespace {

void check_valid(const DensityMatrix& rho) {
    CHECK(hermiticity_defect(rho.mat) < 1e-14);
    CHECK(std::abs(rho.mat.trace().real() - 1.0) < 1e-14);
    RealVector ev = eig_hermitian_desc(rho.mat);
    CHECK(ev(ev.size() - 1) >= -1e-12);
}

}  // namespace

TEST_CASE("boundary_rank3") {
    DensityMatrix rho = boundary_rank3();
    check_valid(rho);
    RealVector ev = eig_hermitian_desc(rho.mat);
    CHECK(ev(0) == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(ev(2) == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(ev(3) == doctest::Approx(0.0).scale(1));
    CHECK(as_lhs(ev) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
}

TEST_CASE("modified_werner limits") {
    check_valid(modified_werner({0.0, 1.1, 0.4}));
    CHECK(max_abs_diff(modified_werner({0.0, 1.1, 0.4}).mat,
                       ComplexMatrix::Identity(4, 4) / 4.0) < 1e-15);
    Eigen::Vector4cd phi = bell_vector(0);
    CHECK(max_abs_diff(modified_werner({1.0, M_PI / 4, 0.0}).mat,
                       ComplexMatrix(phi * phi.adjoint())) < 1e-15);
    CHECK_THROWS_AS(modified_werner({1.5, 0.0, 0.0}), ParamOutOfRangeError);
    CHECK_THROWS_AS(modified_werner({0.5, -0.1, 0.0}), ParamOutOfRangeError);
}

TEST_CASE("modified_werner spectrum is independent of gamma and phi") {
    const double p = 0.42;
    for (double gamma : {0.0, 0.3, M_PI / 4, 1.9, M_PI}) {
        for (double phi : {0.0, 1.0, M_PI, 5.5}) {
            check_valid(modified_werner({p, gamma, phi}));
            RealVector ev = eig_hermitian_desc(modified_werner({p, gamma, phi}).mat);
            CHECK(ev(0) == doctest::Approx((1 + 3 * p) / 4).epsilon(1e-12));
            for (int i = 1; i < 4; ++i)
                CHECK(ev(i) == doctest::Approx((1 - p) / 4).epsilon(1e-12));
        }
    }
}

TEST_CASE("bd_from_probs") {
    Eigen::Vector4cd phi = bell_vector(0);
    CHECK(max_abs_diff(bd_from_probs(1, 0, 0, 0).mat, ComplexMatrix(phi * phi.adjoint())) < 1e-15);
    CHECK(max_abs_diff(bd_from_probs(0.25, 0.25, 0.25, 0.25).mat,
                       ComplexMatrix::Identity(4, 4) / 4.0) < 1e-15);
    RealVector ev = eig_hermitian_desc(bd_from_probs(0.4, 0.3, 0.2, 0.1).mat);
    CHECK(ev(0) == doctest::Approx(0.4).epsilon(1e-13));
    CHECK(ev(1) == doctest::Approx(0.3).epsilon(1e-13));
    CHECK(ev(2) == doctest::Approx(0.2).epsilon(1e-13));
    CHECK(ev(3) == doctest::Approx(0.1).epsilon(1e-13));
    CHECK_THROWS_AS(bd_from_probs(0.6, 0.6, -0.1, -0.1), InvalidStateError);
    CHECK_THROWS_AS(bd_from_probs(0.2, 0.2, 0.2, 0.2), InvalidStateError);
}

TEST_CASE("bd_from_correlations endpoints") {
    CHECK(max_abs_diff(bd_from_correlations(0, 0, 0).mat, ComplexMatrix::Identity(4, 4) / 4.0) <
          1e-15);
    Eigen::Vector4cd phip = bell_vector(0);
    CHECK(max_abs_diff(bd_from_correlations(1, -1, 1).mat, ComplexMatrix(phip * phip.adjoint())) <
          1e-14);
    Eigen::Vector4cd psim = bell_vector(3);
    CHECK(max_abs_diff(bd_from_correlations(-1, -1, -1).mat, ComplexMatrix(psim * psim.adjoint())) <
          1e-14);
    CHECK_THROWS_AS(bd_from_correlations(1, 1, 1), InvalidStateError);
}

TEST_CASE("bd_from_correlations is Bell diagonal with the mapped weights") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    for (int rep = 0; rep < 20; ++rep) {
        double c1 = u(rng), c2 = u(rng), c3 = u(rng);
        ComplexMatrix rho = bd_from_correlations(c1, c2, c3).mat;
        auto probs = bd_probs_from_correlations(c1, c2, c3);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                Complex elem = bell_vector(i).adjoint() * rho * bell_vector(j);
                Complex expected = i == j ? Complex(probs[i], 0.0) : Complex(0.0, 0.0);
                CHECK(std::abs(elem - expected) < 1e-14);
            }
        }
    }
}

TEST_CASE("probs -> correlations -> probs round trip") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int rep = 0; rep < 30; ++rep) {
        double raw[4];
        double sum = 0.0;
        for (double& x : raw) sum += (x = u(rng));
        for (double& x : raw) x /= sum;
        // inverse of the probability map
        double c1 = raw[0] + raw[1] - raw[2] - raw[3];
        double c2 = -raw[0] + raw[1] + raw[2] - raw[3];
        double c3 = raw[0] - raw[1] + raw[2] - raw[3];
        auto mapped = bd_probs_from_correlations(c1, c2, c3);
        for (int i = 0; i < 4; ++i) CHECK(mapped[i] == doctest::Approx(raw[i]).epsilon(1e-12));
        CHECK(max_abs_diff(bd_from_correlations(c1, c2, c3).mat,
                           bd_from_probs(raw[0], raw[1], raw[2], raw[3]).mat) < 1e-14);
    }
}

TEST_CASE("bd_alpha_family") {
    RealVector ev = eig_hermitian_desc(bd_alpha_family(1.0 / 6).mat);
    CHECK(ev(0) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(ev(3) == doctest::Approx(0.0).scale(1));
    Eigen::Vector4cd phi = bell_vector(0);
    CHECK(max_abs_diff(bd_alpha_family(0.5).mat, ComplexMatrix(phi * phi.adjoint())) < 1e-14);
    CHECK(max_abs_diff(bd_alpha_family(0.25).mat, ComplexMatrix::Identity(4, 4) / 4.0) < 1e-15);
    CHECK_THROWS_AS(bd_alpha_family(0.1), ParamOutOfRangeError);
    CHECK_THROWS_AS(bd_alpha_family(0.6), ParamOutOfRangeError);
}

TEST_CASE("maximally_mixed") {
    CHECK(max_abs_diff(maximally_mixed({2, 2}).mat, ComplexMatrix::Identity(4, 4) / 4.0) == 0.0);
    CHECK(max_abs_diff(maximally_mixed({2, 3}).mat, ComplexMatrix::Identity(6, 6) / 6.0) == 0.0);
    for (Eigen::Index d : {3, 4, 10}) {
        RealVector ev = eig_hermitian_desc(maximally_mixed({2, d}).mat);
        CHECK(as_lhs(ev) == doctest::Approx(-1.0 / d).epsilon(1e-12));
    }
}

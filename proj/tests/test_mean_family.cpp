#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "qmetro/mean_family.hpp"

using namespace qmetro;
using qmetro::testing::random_positive;
using qmetro::testing::random_real_psd;

namespace {

HermitianMatrix diag2(double a, double b) {
    Eigen::VectorXd d(2);
    d << a, b;
    return HermitianMatrix::diagonal(d);
}

}  // namespace

TEST_CASE("WeightMatrix validation and normalization") {
    CHECK_THROWS_AS(WeightMatrix((Eigen::MatrixXd(2, 2) << 0, 1, 0, 0).finished()),
                    ValidationError);
    CHECK_THROWS_AS(WeightMatrix((Eigen::MatrixXd(2, 2) << 1, 0, 0, -1).finished()),
                    ValidationError);

    const WeightMatrix w(Eigen::MatrixXd::Identity(3, 3));  // trace 3, normalized on ingestion
    CHECK(w.was_renormalized());
    CHECK(w.mat().trace() == doctest::Approx(1.0));
    CHECK_FALSE(WeightMatrix::uniform(3).was_renormalized());

    CHECK_THROWS_AS(MeanSpec(1.5, WeightMatrix::uniform(2)), ValidationError);
}

TEST_CASE("classical means of diag(1,4)") {
    const auto x = diag2(1, 4);
    CHECK(weighted_f_mean(x, {1.0, WeightMatrix::uniform(2)}) == doctest::Approx(2.5));
    CHECK(weighted_f_mean(x, {0.0, WeightMatrix::uniform(2)}) == doctest::Approx(2.0));
    CHECK(weighted_f_mean(x, {-1.0, WeightMatrix::uniform(2)}) == doctest::Approx(1.6));
}

TEST_CASE("reciprocal_mean") {
    // scalar matrix: every mean collapses to the scalar
    for (double s : {-1.0, -0.3, 0.0, 0.7, 1.0}) {
        const auto c = HermitianMatrix::symmetrized(3.7 * Eigen::MatrixXcd::Identity(3, 3));
        CHECK(reciprocal_mean(c, {s, WeightMatrix::uniform(3)}) == doctest::Approx(3.7));
    }
    CHECK(reciprocal_mean(diag2(1, 4), {1.0, WeightMatrix::uniform(2)}) == doctest::Approx(1.6));
    // eigenvalues (1,2): geometric case gives sqrt(2)
    CHECK(reciprocal_mean(diag2(1, 2), {0.0, WeightMatrix::uniform(2)}) ==
          doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("domain errors for singular input") {
    const auto x = diag2(1, 0);
    CHECK_THROWS_AS(weighted_f_mean(x, {0.0, WeightMatrix::uniform(2)}), DomainError);
    CHECK_THROWS_AS(weighted_f_mean(x, {-1.0, WeightMatrix::uniform(2)}), DomainError);
    CHECK_NOTHROW(weighted_f_mean(x, {1.0, WeightMatrix::uniform(2)}));
    CHECK_THROWS_AS(reciprocal_mean(x, {1.0, WeightMatrix::uniform(2)}), DomainError);
    CHECK_THROWS_AS(weighted_f_mean(diag2(1, 1), {1.0, WeightMatrix::uniform(3)}),
                    ValidationError);
}

TEST_CASE("comparability in s") {
    std::mt19937_64 rng(31);
    const double grid[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 2 + static_cast<int>(rng() % 3);
        const auto x = random_positive(dim, rng);
        const WeightMatrix g(random_real_psd(dim, rng));
        double prev = -1e300;
        for (double s : grid) {
            const double m = weighted_f_mean(x, {s, g});
            CHECK(m >= prev - 1e-10);
            prev = m;
        }
    }
}

TEST_CASE("homogeneity") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> tdist(1e-3, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = random_positive(3, rng);
        const WeightMatrix g(random_real_psd(3, rng));
        const double t = tdist(rng);
        const auto tx = HermitianMatrix::symmetrized(t * x.mat());
        for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            const double lhs = weighted_f_mean(tx, {s, g});
            const double rhs = t * weighted_f_mean(x, {s, g});
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        }
    }
}

TEST_CASE("n=1 reduces to the scalar for every s") {
    const auto x = HermitianMatrix::symmetrized(2.3 * Eigen::MatrixXcd::Identity(1, 1));
    for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        CHECK(weighted_f_mean(x, {s, WeightMatrix::uniform(1)}) == doctest::Approx(2.3));
    }
}

TEST_CASE("continuity at s = 0") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_positive(3, rng);
        const WeightMatrix g(random_real_psd(3, rng));
        const double m0 = weighted_f_mean(x, {0.0, g});
        for (double s : {1e-4, -1e-4}) {
            CHECK(std::abs(weighted_f_mean(x, {s, g}) - m0) < 1e-3 * m0);
        }
    }
}

TEST_CASE("imaginary part of f(X) is irrelevant under a real weight") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_positive(3, rng);
        const Eigen::MatrixXd g = random_real_psd(3, rng);
        const auto fx = matrix_power(x, 0.5);
        const double tr_im = (g * fx.mat().imag()).trace();
        CHECK(std::abs(tr_im) < 1e-10);
    }
}

TEST_CASE("mean lies between the extreme eigenvalues") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const auto x = random_positive(4, rng);
        const auto ed = eig_hermitian(x);
        const WeightMatrix g(random_real_psd(4, rng));
        for (double s : {-1.0, 0.0, 1.0}) {
            const double m = weighted_f_mean(x, {s, g});
            CHECK(m >= ed.eigenvalues(0) - 1e-10);
            CHECK(m <= ed.eigenvalues(3) + 1e-10);
        }
    }
}

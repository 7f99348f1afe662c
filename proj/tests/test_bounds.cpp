#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "qmetro/bounds.hpp"

using namespace qmetro;
using qmetro::testing::random_hermitian;
using qmetro::testing::random_positive;
using qmetro::testing::random_real_psd;

namespace {

QfiMatrix sld_of(const Eigen::MatrixXcd& m) { return QfiMatrix{QfiKind::SLD, m}; }
QfiMatrix rld_of(const Eigen::MatrixXcd& m) { return QfiMatrix{QfiKind::RLD, m}; }

Eigen::MatrixXcd thermal_rld(double eta) {
    Eigen::MatrixXcd fr(2, 2);
    fr << Complex(2 * eta + 1, 0), Complex(0, -1), Complex(0, 1), Complex(2 * eta + 1, 0);
    return fr / (eta * (eta + 1));
}

}  // namespace

TEST_CASE("plain bound on a diagonal information matrix") {
    Eigen::VectorXd d(2);
    d << 1, 4;
    const auto f = sld_of(Eigen::MatrixXcd(d.asDiagonal()));
    const auto g = WeightMatrix::uniform(2);
    CHECK(fmean_qcrb(f, {-1.0, g}, 1) == doctest::Approx(0.4));    // 1 / arithmetic
    CHECK(fmean_qcrb(f, {0.0, g}, 1) == doctest::Approx(0.5));     // 1 / geometric
    CHECK(fmean_qcrb(f, {1.0, g}, 1) == doctest::Approx(0.625));   // 1 / harmonic
    CHECK(fmean_qcrb(f, {1.0, g}, 5) == doctest::Approx(0.125));   // nu scaling
}

TEST_CASE("plain bound is nondecreasing in s") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = sld_of(random_positive(3, rng).mat());
        const WeightMatrix g(random_real_psd(3, rng));
        double prev = -1e300;
        for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            const double b = fmean_qcrb(f, {s, g}, 1);
            CHECK(b >= prev - 1e-10);
            prev = b;
        }
    }
}

TEST_CASE("refined bound reduces to the plain bound for real matrices") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::MatrixXd real_f = random_real_psd(3, rng) + Eigen::MatrixXd::Identity(3, 3);
        const auto f = sld_of(real_f.cast<Complex>());
        const WeightMatrix g(random_real_psd(3, rng));
        for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            CHECK(refined_qcrb(f, {s, g}, 2) ==
                  doctest::Approx(fmean_qcrb(f, {s, g}, 2)).epsilon(1e-9));
        }
    }
}

TEST_CASE("refined bound closed forms for the thermal RLD matrix") {
    for (double eta : {0.2, 1.0, 5.0}) {
        const auto f = rld_of(thermal_rld(eta));
        const auto g = WeightMatrix::uniform(2);
        CHECK(refined_qcrb(f, {-1.0, g}, 1) == doctest::Approx(eta / 2).epsilon(1e-10));
        CHECK(refined_qcrb(f, {-0.5, g}, 1) == doctest::Approx(eta / 2).epsilon(1e-10));
        CHECK(refined_qcrb(f, {0.0, g}, 1) == doctest::Approx((eta + 1) / 2).epsilon(1e-10));
        CHECK(refined_qcrb(f, {0.5, g}, 1) == doctest::Approx((eta + 1) / 2).epsilon(1e-10));
        CHECK(refined_qcrb(f, {1.0, g}, 1) == doctest::Approx((eta + 1) / 2).epsilon(1e-10));
        // refined dominates plain for s >= 0
        for (double s : {0.0, 0.5, 1.0}) {
            CHECK(refined_qcrb(f, {s, g}, 1) >= fmean_qcrb(f, {s, g}, 1) - 1e-12);
        }
    }
}

TEST_CASE("degenerate information is rejected") {
    Eigen::VectorXd d(2);
    d << 1, 0;
    const auto f = sld_of(Eigen::MatrixXcd(d.asDiagonal()));
    CHECK_THROWS_AS(fmean_qcrb(f, {1.0, WeightMatrix::uniform(2)}, 1), DomainError);
    CHECK_THROWS_AS(refined_qcrb(f, {1.0, WeightMatrix::uniform(2)}, 1), DomainError);
}

TEST_CASE("weighted scalar bound") {
    const auto f = rld_of(thermal_rld(1.0));
    // F^{-1} has eigenvalues 1/2 and 1; uniform weight I/2 gives 3/4
    CHECK(weighted_scalar_bound(f, WeightMatrix::uniform(2)) == doctest::Approx(0.75));
}

TEST_CASE("matrix QCRB predicate") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 30; ++trial) {
        const auto fh = random_positive(3, rng);
        const auto f = sld_of(fh.mat());
        const auto slack = random_positive(3, rng, 0.0);
        const auto finv = matrix_inverse(fh);
        const auto e_ok = HermitianMatrix::symmetrized(finv.mat() + slack.mat());
        CHECK(matrix_qcrb_holds(e_ok, f, 1e-9));
        const auto e_bad = HermitianMatrix::symmetrized(0.5 * finv.mat());
        CHECK_FALSE(matrix_qcrb_holds(e_bad, f, 1e-9));
    }
}

TEST_CASE("scalar trace lemma: A >= B implies tr A >= tr Re B + |Im B|_1") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        // Hermitian PSD B, real A = Re B + Im-compensation + PSD slack so A >= B
        const auto b = random_positive(3, rng).mat();
        const auto slack = random_positive(3, rng, 0.0);
        // A = B_re + |B_im|_1 I + slack dominates B because i*Im B <= |Im B|_1 I
        const double im1 = schatten1_norm(
            HermitianMatrix::symmetrized(Complex(0, 1) * b.imag().cast<Complex>()));
        const Eigen::MatrixXd a =
            b.real() + im1 * Eigen::MatrixXd::Identity(3, 3) + slack.mat().real();
        CHECK(matrix_geq(HermitianMatrix::symmetrized(a.cast<Complex>()),
                         HermitianMatrix::symmetrized(b), 1e-8));
        const auto [lhs, rhs] = scalar_trace_lemma_check(a, b);
        CHECK(lhs >= rhs - 1e-8);
    }
}

TEST_CASE("make_report") {
    const auto g = WeightMatrix::uniform(2);
    const auto fs = sld_of((4.0 / 3.0) * Eigen::MatrixXcd::Identity(2, 2));  // eta = 1 SLD
    const auto fr = rld_of(thermal_rld(1.0));

    SUBCASE("both matrices present") {
        const auto rep = make_report(fs, fr, MeanSpec(1.0, g), 1);
        CHECK(rep.plain_bound_sld == doctest::Approx(0.75));
        CHECK(rep.refined_bound_rld == doctest::Approx(1.0));
        CHECK(rep.best == doctest::Approx(1.0));
        CHECK(rep.s == 1.0);
        CHECK(rep.nu == 1);
    }
    SUBCASE("SLD only") {
        const auto rep = make_report(fs, std::nullopt, MeanSpec(-1.0, g), 2);
        CHECK(rep.plain_bound_sld == doctest::Approx(0.375));
        CHECK(std::isnan(rep.plain_bound_rld));
        CHECK(std::isnan(rep.refined_bound_rld));
        CHECK(rep.best == doctest::Approx(0.375));
    }
    SUBCASE("RLD only, s < 0: SLD can win, here best is refined RLD alone") {
        const auto rep = make_report(std::nullopt, fr, MeanSpec(-1.0, g), 1);
        CHECK(std::isnan(rep.plain_bound_sld));
        CHECK(rep.refined_bound_rld == doctest::Approx(0.5));
        CHECK(rep.best == doctest::Approx(0.5));
    }
}

TEST_CASE("fmean_error is the weighted f-mean of the covariance") {
    std::mt19937_64 rng(103);
    const auto e = random_positive(2, rng);
    const auto g = WeightMatrix::uniform(2);
    CHECK(fmean_error(e, {1.0, g}) == doctest::Approx(weighted_f_mean(e, {1.0, g})));
}

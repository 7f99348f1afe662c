#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "qmetro/resource.hpp"

using namespace qmetro;

namespace {

DensityOperator plus_state() {
    Eigen::MatrixXcd m(2, 2);
    m << 0.5, 0.5, 0.5, 0.5;
    return DensityOperator(HermitianMatrix(m));
}

Eigen::VectorXcd uniform_superposition(int n) {
    return Eigen::VectorXcd::Constant(n, Complex(1.0 / std::sqrt(double(n)), 0.0));
}

DensityOperator bloch_mixed(double r1, double r2, double r3) {
    const Eigen::MatrixXcd m =
        0.5 * (Eigen::MatrixXcd::Identity(2, 2) + r1 * pauli_x() + r2 * pauli_y() +
               r3 * pauli_z());
    return DensityOperator(HermitianMatrix::symmetrized(m));
}

}  // namespace

TEST_CASE("asymmetry") {
    // eigenstate of the generator: zero asymmetry (arithmetic mean only;
    // s <= 0 on a singular matrix is a domain error)
    Eigen::VectorXd p(2);
    p << 0.7, 0.3;
    const DensityOperator diag{HermitianMatrix::diagonal(p)};
    const std::vector<HermitianMatrix> zgen = {HermitianMatrix(0.5 * pauli_z())};
    CHECK(asymmetry(diag, zgen, {1.0, WeightMatrix::uniform(1)}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(asymmetry(diag, zgen, {-1.0, WeightMatrix::uniform(1)}), DomainError);

    // |+> under the sigma_z/2 rotation: unit information
    CHECK(asymmetry(plus_state(), zgen, {1.0, WeightMatrix::uniform(1)}) == doctest::Approx(1.0));

    // two generators, pure state: mean over the diagonal of the QFI matrix
    const std::vector<HermitianMatrix> two = {HermitianMatrix(0.5 * pauli_z()),
                                              HermitianMatrix(0.5 * pauli_x())};
    const double a1 = asymmetry(plus_state(), two, {1.0, WeightMatrix::uniform(2)});
    // F = diag(1, 0) for |+>; arithmetic mean 1/2
    CHECK(a1 == doctest::Approx(0.5));
}

TEST_CASE("coherence_pure") {
    Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(3);
    basis(1) = 1.0;
    CHECK(coherence_pure(basis) == doctest::Approx(0.0));

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::VectorXcd plus(2);
    plus << inv_sqrt2, inv_sqrt2;
    CHECK(coherence_pure(plus) == doctest::Approx(1.0));

    for (int n = 2; n <= 6; ++n) {
        CHECK(coherence_pure(uniform_superposition(n)) == doctest::Approx(coherence_max(n)));
    }

    // invariant under diagonal phases
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> ph(0.0, 6.28);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::VectorXcd psi = qmetro::testing::random_pure_state(4, rng);
        Eigen::VectorXcd rotated = psi;
        for (int j = 0; j < 4; ++j) rotated(j) *= std::polar(1.0, ph(rng));
        CHECK(coherence_pure(rotated) == doctest::Approx(coherence_pure(psi)));
    }

    Eigen::VectorXcd unnormalized = Eigen::VectorXcd::Ones(2);
    CHECK_THROWS_AS(coherence_pure(unnormalized), ValidationError);
}

TEST_CASE("coherence_qubit") {
    CHECK(coherence_qubit(plus_state()) == doctest::Approx(1.0));
    CHECK(coherence_qubit(bloch_mixed(0.0, 0.0, 0.3)) == doctest::Approx(0.0));
    CHECK(coherence_qubit(bloch_mixed(0.3, -0.4, 0.2)) == doctest::Approx(0.25));
    CHECK_THROWS_AS(coherence_qubit(DensityOperator{
                        HermitianMatrix::symmetrized(Eigen::MatrixXcd::Identity(3, 3) / 3.0)}),
                    ValidationError);

    // agrees with coherence_pure on pure qubits
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 20; ++trial) {
        const auto psi = qmetro::testing::random_pure_state(2, rng);
        const DensityOperator rho{HermitianMatrix::symmetrized(psi * psi.adjoint())};
        CHECK(coherence_qubit(rho) == doctest::Approx(coherence_pure(psi)).epsilon(1e-10));
    }
}

TEST_CASE("coherence_upper_bound") {
    // deterministic given seed
    const auto rho = bloch_mixed(0.4, 0.2, 0.1);
    CHECK(coherence_upper_bound(rho, 50, 7) == coherence_upper_bound(rho, 50, 7));

    // incoherent states: the eigen-ensemble candidate already gives 0
    Eigen::VectorXd p(3);
    p << 0.5, 0.3, 0.2;
    CHECK(coherence_upper_bound(DensityOperator{HermitianMatrix::diagonal(p)}, 10, 1) ==
          doctest::Approx(0.0));

    // pure states: unique decomposition, equals coherence_pure
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::VectorXcd plus(2);
    plus << inv_sqrt2, inv_sqrt2;
    const DensityOperator pure{HermitianMatrix::symmetrized(plus * plus.adjoint())};
    CHECK(coherence_upper_bound(pure, 10, 1) == doctest::Approx(1.0).epsilon(1e-9));

    // always an upper bound on the exact qubit convex roof, and tight
    // within 1e-3 at the standard trial budget
    std::mt19937_64 rng(113);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    for (int trial = 0; trial < 5; ++trial) {
        const auto mixed = bloch_mixed(u(rng), u(rng), u(rng));
        const double exact = coherence_qubit(mixed);
        const double ub = coherence_upper_bound(mixed, 2000, 1000 + trial);
        CHECK(ub >= exact - 1e-9);
        CHECK(ub <= exact + 1e-3);
    }

    CHECK_THROWS_AS(coherence_upper_bound(rho, 0, 1), ValidationError);
}

TEST_CASE("coherence_max") {
    CHECK(coherence_max(1) == doctest::Approx(0.0));
    CHECK(coherence_max(2) == doctest::Approx(1.0));
    CHECK(coherence_max(4) == doctest::Approx(0.75));
    CHECK_THROWS_AS(coherence_max(0), ValidationError);
}

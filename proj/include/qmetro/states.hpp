#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "qmetro/hermitian.hpp"

namespace qmetro {

/// PSD, unit-trace Hermitian matrix.
class DensityOperator {
public:
    explicit DensityOperator(HermitianMatrix m);

    int dim() const { return rho_.dim(); }
    const HermitianMatrix& hermitian() const { return rho_; }
    const Eigen::MatrixXcd& mat() const { return rho_.mat(); }

private:
    HermitianMatrix rho_;
};

/// theta -> density operator, with a derivative provider (analytic
/// commutator where valid, central finite differences otherwise).
struct ParametricFamily {
    int n_params;
    std::function<DensityOperator(const Eigen::VectorXd&)> evaluate;
    std::function<std::vector<Eigen::MatrixXcd>(const Eigen::VectorXd&)> derivatives;
};

class KrausChannel {
public:
    explicit KrausChannel(std::vector<Eigen::MatrixXcd> ops);

    int dim() const { return static_cast<int>(ops_.front().rows()); }
    const std::vector<Eigen::MatrixXcd>& ops() const { return ops_; }

private:
    std::vector<Eigen::MatrixXcd> ops_;
};

/// exp(iH) via eigendecomposition of the Hermitian exponent.
Eigen::MatrixXcd exp_i(const HermitianMatrix& h);

/// rho_theta = exp(i sum theta_j Z_j) rho0 exp(-i sum theta_j Z_j).
/// Derivatives are i[Z_j, rho_theta] when the generators commute (any
/// theta) or at theta = 0; otherwise central finite differences, h = 1e-5.
ParametricFamily unitary_family(const DensityOperator& rho0,
                                std::vector<HermitianMatrix> generators,
                                bool commuting);

/// Qubit family rho = (I + theta_1 sigma_x + theta_2 sigma_y + z0 sigma_z)/2
/// with constant derivatives sigma_j/2.
ParametricFamily bloch_family(double z0);

DensityOperator apply_channel(const KrausChannel& ch, const DensityOperator& rho);
/// Linear action on an arbitrary matrix (used to map family derivatives).
Eigen::MatrixXcd apply_channel(const KrausChannel& ch, const Eigen::MatrixXcd& m);

DensityOperator random_density(int dim, int rank, std::uint64_t seed);
KrausChannel random_channel(int dim, int n_kraus, std::uint64_t seed);
Eigen::MatrixXcd random_unitary(int dim, std::uint64_t seed);

// Pauli matrices.
Eigen::MatrixXcd pauli_x();
Eigen::MatrixXcd pauli_y();
Eigen::MatrixXcd pauli_z();

}  // namespace qmetro

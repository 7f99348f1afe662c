#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qmetro/states.hpp"

namespace qmetro {

/// Positive-operator-valued measure: PSD effects summing to identity.
class Povm {
public:
    explicit Povm(std::vector<HermitianMatrix> effects);

    int dim() const { return effects_.front().dim(); }
    int n_outcomes() const { return static_cast<int>(effects_.size()); }
    const std::vector<HermitianMatrix>& effects() const { return effects_; }

private:
    std::vector<HermitianMatrix> effects_;
};

/// Half-half mixture of sigma_x and sigma_y projective measurements
/// (4 outcomes): the verification measurement for the qubit test family.
Povm xy_mixed_povm();

/// p_y = tr M_y rho.
Eigen::VectorXd outcome_probs(const Povm& povm, const DensityOperator& rho);

/// [I_c]_{jk} = sum_y (d_j p_y)(d_k p_y)/p_y over outcomes with p_y > 1e-12.
Eigen::MatrixXd classical_fisher(const Povm& povm, const DensityOperator& rho,
                                 const std::vector<Eigen::MatrixXcd>& drho);

/// Per-outcome estimates theta~(y) = theta0 + I_c^{-1} d(y) with
/// d_j(y) = d_j p_y / p_y.  Locally unbiased at theta0 by construction;
/// dropped (zero-probability) outcomes estimate theta0.
struct EstimatorTable {
    std::vector<Eigen::VectorXd> estimates;
};

EstimatorTable locally_unbiased_estimator(const Povm& povm, const DensityOperator& rho,
                                          const std::vector<Eigen::MatrixXcd>& drho,
                                          const Eigen::VectorXd& theta0);

struct SimResult {
    Eigen::MatrixXd covariance;  // empirical error-covariance matrix
    Eigen::MatrixXd stderr_mat;  // per-entry standard error of the mean
};

/// Samples outcomes i.i.d. from p(.|theta_true) and applies the locally
/// unbiased estimator built at theta_true.  Deterministic given seed.
SimResult simulate(const ParametricFamily& family, const Povm& povm,
                   const Eigen::VectorXd& theta_true, long shots, std::uint64_t seed);

}  // namespace qmetro

#include "qmetro/estimation.hpp"

#include <cmath>
#include <random>
#include <string>

namespace qmetro {

Povm::Povm(std::vector<HermitianMatrix> effects) : effects_(std::move(effects)) {
    if (effects_.empty()) throw ValidationError("Povm: needs at least one effect");
    const int d = effects_.front().dim();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& e : effects_) {
        if (e.dim() != d) throw ValidationError("Povm: effects must share one dimension");
        if (!is_psd(e, 1e-10)) throw ValidationError("Povm: effect is not PSD");
        sum += e.mat();
    }
    const double drift = (sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
    if (drift > 1e-10) {
        throw ValidationError("Povm: effects sum differs from identity by " +
                              std::to_string(drift));
    }
}

Povm xy_mixed_povm() {
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
    std::vector<HermitianMatrix> effects;
    for (const auto& sigma : {pauli_x(), pauli_y()}) {
        effects.emplace_back(HermitianMatrix::symmetrized(0.25 * (id + sigma)));
        effects.emplace_back(HermitianMatrix::symmetrized(0.25 * (id - sigma)));
    }
    return Povm(std::move(effects));
}

Eigen::VectorXd outcome_probs(const Povm& povm, const DensityOperator& rho) {
    if (povm.dim() != rho.dim()) throw ValidationError("outcome_probs: dimension mismatch");
    Eigen::VectorXd p(povm.n_outcomes());
    for (int y = 0; y < povm.n_outcomes(); ++y) {
        p(y) = std::real((povm.effects()[y].mat() * rho.mat()).trace());
    }
    return p;
}

namespace {

Eigen::MatrixXd prob_derivatives(const Povm& povm, const std::vector<Eigen::MatrixXcd>& drho) {
    const int n = static_cast<int>(drho.size());
    Eigen::MatrixXd dp(povm.n_outcomes(), n);
    for (int y = 0; y < povm.n_outcomes(); ++y) {
        for (int j = 0; j < n; ++j) {
            dp(y, j) = std::real((povm.effects()[y].mat() * drho[j]).trace());
        }
    }
    return dp;
}

}  // namespace

Eigen::MatrixXd classical_fisher(const Povm& povm, const DensityOperator& rho,
                                 const std::vector<Eigen::MatrixXcd>& drho) {
    const Eigen::VectorXd p = outcome_probs(povm, rho);
    const Eigen::MatrixXd dp = prob_derivatives(povm, drho);
    const int n = static_cast<int>(drho.size());
    Eigen::MatrixXd fisher = Eigen::MatrixXd::Zero(n, n);
    for (int y = 0; y < p.size(); ++y) {
        if (p(y) <= 1e-12) continue;  // uninformative outcome, dropped
        fisher += dp.row(y).transpose() * dp.row(y) / p(y);
    }
    return fisher;
}

EstimatorTable locally_unbiased_estimator(const Povm& povm, const DensityOperator& rho,
                                          const std::vector<Eigen::MatrixXcd>& drho,
                                          const Eigen::VectorXd& theta0) {
    const int n = static_cast<int>(drho.size());
    if (theta0.size() != n) {
        throw ValidationError("locally_unbiased_estimator: theta0 has wrong length");
    }
    const Eigen::MatrixXd fisher = classical_fisher(povm, rho, drho);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(fisher);
    if (!lu.isInvertible()) {
        throw DomainError("locally_unbiased_estimator: singular classical Fisher matrix, "
                          "parameters are unidentifiable under this measurement");
    }
    const Eigen::MatrixXd fisher_inv = lu.inverse();
    const Eigen::VectorXd p = outcome_probs(povm, rho);
    const Eigen::MatrixXd dp = prob_derivatives(povm, drho);

    EstimatorTable table;
    table.estimates.reserve(povm.n_outcomes());
    for (int y = 0; y < p.size(); ++y) {
        if (p(y) <= 1e-12) {
            table.estimates.push_back(theta0);
            continue;
        }
        const Eigen::VectorXd d = dp.row(y).transpose() / p(y);
        table.estimates.push_back(theta0 + fisher_inv * d);
    }
    return table;
}

SimResult simulate(const ParametricFamily& family, const Povm& povm,
                   const Eigen::VectorXd& theta_true, long shots, std::uint64_t seed) {
    if (shots < 1000) throw ValidationError("simulate: shots must be >= 1000");
    const DensityOperator rho = family.evaluate(theta_true);
    const auto drho = family.derivatives(theta_true);
    const Eigen::VectorXd p = outcome_probs(povm, rho);

    // Same construction as locally_unbiased_estimator, but through the
    // pseudo-inverse: an uninformative measurement (singular Fisher)
    // pins every estimate at theta_true instead of erroring out.
    const Eigen::MatrixXd fisher = classical_fisher(povm, rho, drho);
    const Eigen::MatrixXd fisher_pinv =
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(fisher).pseudoInverse();
    const Eigen::MatrixXd dp = prob_derivatives(povm, drho);
    EstimatorTable table;
    for (int y = 0; y < p.size(); ++y) {
        if (p(y) <= 1e-12) {
            table.estimates.push_back(theta_true);
            continue;
        }
        table.estimates.push_back(theta_true + fisher_pinv * (dp.row(y).transpose() / p(y)));
    }

    Eigen::VectorXd cdf(p.size());
    double acc = 0.0;
    for (int y = 0; y < p.size(); ++y) {
        acc += std::max(p(y), 0.0);
        cdf(y) = acc;
    }

    const int n = static_cast<int>(theta_true.size());
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd sum_sq = Eigen::MatrixXd::Zero(n, n);
    std::mt19937_64 rng(seed);
    for (long shot = 0; shot < shots; ++shot) {
        // 53-bit uniform in [0, 1); hand-rolled so runs are reproducible
        // independent of the standard library's distribution internals.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        int y = 0;
        while (y + 1 < cdf.size() && u >= cdf(y)) ++y;
        const Eigen::VectorXd dev = table.estimates[y] - theta_true;
        const Eigen::MatrixXd z = dev * dev.transpose();
        sum += z;
        sum_sq += z.cwiseProduct(z);
    }

    SimResult result;
    result.covariance = sum / static_cast<double>(shots);
    const Eigen::MatrixXd var =
        (sum_sq / static_cast<double>(shots) - result.covariance.cwiseProduct(result.covariance))
            .cwiseMax(0.0);
    result.stderr_mat = (var / static_cast<double>(shots)).cwiseSqrt();
    return result;
}

}  // namespace qmetro

#include "qmetro/coherent_signal.hpp"

#include <cmath>
#include <limits>

namespace qmetro {

namespace {

void require_eta(double eta) {
    if (!(eta > 0.0)) {
        throw DomainError("coherent-signal: eta must be > 0 (the RLD information diverges at 0), got " +
                          std::to_string(eta));
    }
}

double unweighted_mean2(double x1, double x2, double s) {
    if (s == 0.0) return std::sqrt(x1 * x2);
    return std::pow(0.5 * std::pow(x1, s) + 0.5 * std::pow(x2, s), 1.0 / s);
}

}  // namespace

std::pair<QfiMatrix, QfiMatrix> analytic_qfis(double eta) {
    require_eta(eta);
    Eigen::MatrixXcd fs = 4.0 / (2.0 * eta + 1.0) * Eigen::MatrixXcd::Identity(2, 2);
    Eigen::MatrixXcd fr(2, 2);
    fr << Complex(2.0 * eta + 1.0, 0.0), Complex(0.0, -1.0),
          Complex(0.0, 1.0), Complex(2.0 * eta + 1.0, 0.0);
    fr /= eta * (eta + 1.0);
    return {QfiMatrix{QfiKind::SLD, std::move(fs)}, QfiMatrix{QfiKind::RLD, std::move(fr)}};
}

SignalBound analytic_bound(double eta, double s) {
    require_eta(eta);
    if (!(s >= -1.0 && s <= 1.0)) {
        throw ValidationError("analytic_bound: s must lie in [-1, 1]");
    }
    SignalBound b{};
    b.sld_bound = (2.0 * eta + 1.0) / 4.0;
    // RLD eigenvalues are 2/(1+eta) and 2/eta.
    b.rld_plain = 1.0 / unweighted_mean2(2.0 / (1.0 + eta), 2.0 / eta, -s);
    b.rld_refined = s < 0.0 ? eta / 2.0 : (eta + 1.0) / 2.0;
    b.overall = s < 0.0 ? b.sld_bound : b.rld_refined;
    return b;
}

DensityOperator displaced_thermal_state(double eta, std::complex<double> mu, int n_trunc) {
    require_eta(eta);
    if (n_trunc < 2) throw ValidationError("displaced_thermal_state: n_trunc must be >= 2");

    // Annihilation operator in the truncated Fock basis.
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n_trunc, n_trunc);
    for (int k = 1; k < n_trunc; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));

    // D(mu) = exp(mu a^dagger - conj(mu) a); the exponent is i H with
    // Hermitian H, so the exponential goes through eig_hermitian.
    const Eigen::MatrixXcd exponent = mu * a.adjoint() - std::conj(mu) * a;
    const Eigen::MatrixXcd d = exp_i(HermitianMatrix::symmetrized(Complex(0, -1) * exponent));

    Eigen::VectorXd weights(n_trunc);
    for (int k = 0; k < n_trunc; ++k) {
        weights(k) = std::pow(eta / (1.0 + eta), k) / (1.0 + eta);
    }
    Eigen::MatrixXcd rho = d * weights.asDiagonal().toDenseMatrix().cast<Complex>() * d.adjoint();
    const double tr = std::real(rho.trace());
    if (1.0 - tr > 1e-6) {
        throw DomainError("displaced_thermal_state: truncation deficit " + std::to_string(1.0 - tr) +
                          " exceeds 1e-6; raise n_trunc (try " + std::to_string(2 * n_trunc) + ")");
    }
    rho /= tr;
    return DensityOperator(HermitianMatrix::symmetrized(std::move(rho)));
}

ParametricFamily displaced_thermal_family(double eta, int n_trunc) {
    require_eta(eta);
    auto evaluate = [eta, n_trunc](const Eigen::VectorXd& theta) {
        if (theta.size() != 2) {
            throw ValidationError("displaced_thermal_family: theta has wrong length");
        }
        return displaced_thermal_state(eta, {theta(0), theta(1)}, n_trunc);
    };
    auto derivatives = [evaluate](const Eigen::VectorXd& theta) {
        // Truncation noise dominates round-off here; h larger than the
        // generic 1e-5 step.
        const double h = 1e-4;
        std::vector<Eigen::MatrixXcd> out;
        for (int j = 0; j < 2; ++j) {
            Eigen::VectorXd tp = theta, tm = theta;
            tp(j) += h;
            tm(j) -= h;
            out.push_back((evaluate(tp).mat() - evaluate(tm).mat()) / (2.0 * h));
        }
        return out;
    };
    return ParametricFamily{2, std::move(evaluate), std::move(derivatives)};
}

std::vector<RegionRecord> region_scan(double eta, const std::vector<double>& e1_grid,
                                      const std::vector<double>& e2_grid,
                                      const std::vector<double>& s_set) {
    require_eta(eta);
    std::vector<RegionRecord> records;
    records.reserve(e1_grid.size() * e2_grid.size());
    for (double e1 : e1_grid) {
        for (double e2 : e2_grid) {
            RegionRecord rec{e1, e2, false, std::numeric_limits<double>::quiet_NaN()};
            double worst = 0.0;
            for (double s : s_set) {
                const double bound = analytic_bound(eta, s).overall;
                const double violation = bound - unweighted_mean2(e1, e2, s);
                if (violation > 1e-12 && violation > worst) {
                    worst = violation;
                    rec.forbidden = true;
                    rec.binding_s = s;
                }
            }
            records.push_back(rec);
        }
    }
    return records;
}

}  // namespace qmetro

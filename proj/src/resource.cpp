#include "qmetro/resource.hpp"

#include <cmath>
#include <random>

#include "qmetro/qfi.hpp"

namespace qmetro {

double asymmetry(const DensityOperator& rho, const std::vector<HermitianMatrix>& generators,
                 const MeanSpec& spec) {
    const auto family = unitary_family(rho, generators, /*commuting=*/false);
    const Eigen::VectorXd theta0 = Eigen::VectorXd::Zero(family.n_params);
    const QfiMatrix f = qfi_sld(rho, family.derivatives(theta0));
    return weighted_f_mean(f.hermitian(), spec);
}

double coherence_pure(const Eigen::VectorXcd& psi) {
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw ValidationError("coherence_pure: state vector is not normalized");
    }
    const int n = static_cast<int>(psi.size());
    double quartic = 0.0;
    for (int j = 0; j < n; ++j) {
        const double pj = std::norm(psi(j));
        quartic += pj * pj;
    }
    return 4.0 / n * (1.0 - quartic);
}

double coherence_qubit(const DensityOperator& rho) {
    if (rho.dim() != 2) {
        throw ValidationError("coherence_qubit: the analytic formula applies to dim 2 only");
    }
    const double r1 = std::real((pauli_x() * rho.mat()).trace());
    const double r2 = std::real((pauli_y() * rho.mat()).trace());
    return r1 * r1 + r2 * r2;
}

namespace {

// Ensemble average of coherence_pure for the decomposition induced by an
// m x rank isometry V acting on the weighted eigenvectors of rho
// (Schroedinger-HJW parametrization): phi_l = sum_a V(l,a) sqrt(lambda_a) u_a.
double ensemble_value(const Eigen::MatrixXcd& v, const Eigen::MatrixXcd& weighted_vecs) {
    const int m = static_cast<int>(v.rows());
    const int n = static_cast<int>(weighted_vecs.rows());
    double total = 0.0;
    for (int l = 0; l < m; ++l) {
        const Eigen::VectorXcd phi = weighted_vecs * v.row(l).transpose();
        const double p = phi.squaredNorm();
        if (p < 1e-15) continue;
        double quartic = 0.0;
        for (int j = 0; j < n; ++j) {
            const double w = std::norm(phi(j)) / p;
            quartic += w * w;
        }
        total += p * 4.0 / n * (1.0 - quartic);
    }
    return total;
}

Eigen::MatrixXcd gaussian_complex(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
    }
    return m;
}

Eigen::MatrixXcd orthonormalize(const Eigen::MatrixXcd& a) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(a.rows(), a.cols());
}

}  // namespace

double coherence_upper_bound(const DensityOperator& rho, int trials, std::uint64_t seed) {
    if (trials < 1) throw ValidationError("coherence_upper_bound: trials must be >= 1");
    const auto ed = eig_hermitian(rho.hermitian());
    const int n = rho.dim();
    int rank = 0;
    for (int a = 0; a < n; ++a) {
        if (ed.eigenvalues(a) > 1e-12) ++rank;
    }
    if (rank == 0) throw DomainError("coherence_upper_bound: state has no support");

    // Columns sqrt(lambda_a) u_a over the support.
    Eigen::MatrixXcd weighted(n, rank);
    int col = 0;
    for (int a = 0; a < n; ++a) {
        if (ed.eigenvalues(a) > 1e-12) {
            weighted.col(col++) = std::sqrt(ed.eigenvalues(a)) * ed.eigenvectors.col(a);
        }
    }

    std::mt19937_64 rng(seed);
    // The eigen-ensemble itself is the first candidate; it is optimal for
    // incoherent states and the unique decomposition of pure states.
    Eigen::MatrixXcd best_v = Eigen::MatrixXcd::Identity(rank, rank);
    double best = ensemble_value(best_v, weighted);

    for (int t = 0; t < trials; ++t) {
        Eigen::MatrixXcd candidate;
        if (t % 2 == 0) {
            const int m = rank + (t / 2) % 4;
            candidate = orthonormalize(gaussian_complex(m, rank, rng));
        } else {
            const double sigma = 0.5 * std::pow(0.995, t);
            candidate = orthonormalize(best_v + sigma * gaussian_complex(
                                                      static_cast<int>(best_v.rows()), rank, rng));
        }
        const double value = ensemble_value(candidate, weighted);
        if (value < best) {
            best = value;
            best_v = std::move(candidate);
        }
    }
    return best;
}

double coherence_max(int n) {
    if (n < 1) throw ValidationError("coherence_max: n must be >= 1");
    return 4.0 * (n - 1) / (static_cast<double>(n) * n);
}

}  // namespace qmetro

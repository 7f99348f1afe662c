#include "qmetro/qfi.hpp"

#include <cmath>
#include <string>

namespace qmetro {

namespace {

void check_drho(const DensityOperator& rho, const std::vector<Eigen::MatrixXcd>& drho,
                const char* op) {
    if (drho.empty()) throw ValidationError(std::string(op) + ": no derivatives given");
    for (const auto& d : drho) {
        if (d.rows() != rho.dim() || d.cols() != rho.dim()) {
            throw ValidationError(std::string(op) + ": derivative dimension mismatch");
        }
    }
}

}  // namespace

std::vector<Eigen::MatrixXcd> sld_operators(const DensityOperator& rho,
                                            const std::vector<Eigen::MatrixXcd>& drho,
                                            double support_tol) {
    check_drho(rho, drho, "sld_operators");
    const auto ed = eig_hermitian(rho.hermitian());
    std::vector<Eigen::MatrixXcd> out;
    out.reserve(drho.size());
    for (size_t p = 0; p < drho.size(); ++p) {
        const Eigen::MatrixXcd d = ed.eigenvectors.adjoint() * drho[p] * ed.eigenvectors;
        Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
        for (int a = 0; a < rho.dim(); ++a) {
            for (int b = 0; b < rho.dim(); ++b) {
                const double denom = ed.eigenvalues(a) + ed.eigenvalues(b);
                if (denom > support_tol) {
                    l(a, b) = 2.0 * d(a, b) / denom;
                } else if (std::abs(d(a, b)) > 1e-8) {
                    throw DomainError(
                        "sld_operators: derivative " + std::to_string(p) +
                        " has weight outside the state's support (|drho_ab| = " +
                        std::to_string(std::abs(d(a, b))) + " at eigenvalue-pair sum " +
                        std::to_string(denom) + ")");
                }
            }
        }
        out.push_back(ed.eigenvectors * l * ed.eigenvectors.adjoint());
    }
    return out;
}

std::vector<Eigen::MatrixXcd> rld_operators(const DensityOperator& rho,
                                            const std::vector<Eigen::MatrixXcd>& drho) {
    check_drho(rho, drho, "rld_operators");
    const auto ed = eig_hermitian(rho.hermitian());
    if (ed.eigenvalues(0) <= 1e-10) {
        throw DomainError("rld_operators: state is rank-deficient (min eigenvalue " +
                          std::to_string(ed.eigenvalues(0)) + "); the RLD requires full rank");
    }
    const Eigen::MatrixXcd rho_inv =
        ed.eigenvectors * ed.eigenvalues.cwiseInverse().asDiagonal().toDenseMatrix().cast<Complex>() *
        ed.eigenvectors.adjoint();
    std::vector<Eigen::MatrixXcd> out;
    out.reserve(drho.size());
    for (const auto& d : drho) out.push_back(rho_inv * d);
    return out;
}

QfiMatrix qfi_sld(const DensityOperator& rho, const std::vector<Eigen::MatrixXcd>& drho,
                  double support_tol) {
    const auto ls = sld_operators(rho, drho, support_tol);
    const int n = static_cast<int>(ls.size());
    Eigen::MatrixXd f(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            const double v = std::real((ls[j] * ls[k] * rho.mat()).trace());
            f(j, k) = v;
            f(k, j) = v;
        }
    }
    return QfiMatrix{QfiKind::SLD, f.cast<Complex>()};
}

QfiMatrix qfi_rld(const DensityOperator& rho, const std::vector<Eigen::MatrixXcd>& drho,
                  double support_tol) {
    check_drho(rho, drho, "qfi_rld");
    const auto ed = eig_hermitian(rho.hermitian());
    double cut = support_tol;
    if (support_tol <= 0.0) {
        if (ed.eigenvalues(0) <= 1e-10) {
            throw DomainError("qfi_rld: state is rank-deficient (min eigenvalue " +
                              std::to_string(ed.eigenvalues(0)) + "); the RLD requires full rank");
        }
        cut = 0.0;
    }
    const int n = static_cast<int>(drho.size());
    const int dim = rho.dim();
    std::vector<Eigen::MatrixXcd> d_eig;
    d_eig.reserve(n);
    for (const auto& d : drho) d_eig.push_back(ed.eigenvectors.adjoint() * d * ed.eigenvectors);
    // tr(rho^{-1} drho_j drho_k) = sum_{a,b} conj(D_k[a,b]) D_j[a,b] / lambda_a
    Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(n, n);
    for (int a = 0; a < dim; ++a) {
        if (ed.eigenvalues(a) <= cut) continue;
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                Complex acc(0.0, 0.0);
                for (int b = 0; b < dim; ++b) {
                    acc += std::conj(d_eig[k](a, b)) * d_eig[j](a, b);
                }
                f(j, k) += acc / ed.eigenvalues(a);
            }
        }
    }
    f = 0.5 * (f + f.adjoint().eval());
    return QfiMatrix{QfiKind::RLD, std::move(f)};
}

double qfi_unitary_spectral(const DensityOperator& rho, const HermitianMatrix& z) {
    if (z.dim() != rho.dim()) {
        throw ValidationError("qfi_unitary_spectral: generator dimension mismatch");
    }
    const auto ed = eig_hermitian(rho.hermitian());
    const Eigen::MatrixXcd zeig = ed.eigenvectors.adjoint() * z.mat() * ed.eigenvectors;
    double total = 0.0;
    for (int a = 0; a < rho.dim(); ++a) {
        for (int b = 0; b < rho.dim(); ++b) {
            const double sum = ed.eigenvalues(a) + ed.eigenvalues(b);
            if (sum <= 1e-12) continue;
            const double diff = ed.eigenvalues(a) - ed.eigenvalues(b);
            total += 2.0 * diff * diff / sum * std::norm(zeig(a, b));
        }
    }
    return total;
}

double pure_state_mean_qfi(const Eigen::VectorXcd& psi,
                           const std::vector<HermitianMatrix>& generators) {
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw ValidationError("pure_state_mean_qfi: state vector is not normalized (norm " +
                              std::to_string(psi.norm()) + ")");
    }
    if (generators.empty()) throw ValidationError("pure_state_mean_qfi: no generators given");
    const int n = static_cast<int>(generators.size());
    double total = 0.0;
    for (const auto& z : generators) {
        if (z.dim() != psi.size()) {
            throw ValidationError("pure_state_mean_qfi: generator dimension mismatch");
        }
        const Eigen::VectorXcd zpsi = z.mat() * psi;
        const double mean_sq = std::real(Complex(psi.adjoint() * z.mat() * zpsi));
        const double mean = std::real(Complex(psi.adjoint() * zpsi));
        total += mean_sq - mean * mean;
    }
    return 4.0 / n * total;
}

}  // namespace qmetro

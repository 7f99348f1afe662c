#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qmetro/states.hpp"

namespace qmetro {

enum class QfiKind { SLD, RLD };

/// n_params x n_params information matrix.  SLD kind is real symmetric
/// PSD; RLD kind is Hermitian PSD.  The nu-repetition QFI is nu * matrix.
struct QfiMatrix {
    QfiKind kind;
    Eigen::MatrixXcd matrix;

    HermitianMatrix hermitian() const { return HermitianMatrix::symmetrized(matrix); }
};

/// Solve drho = (L rho + rho L)/2 in rho's eigenbasis.  Off-support
/// blocks (eigenvalue pair sum <= support_tol) take the minimal-norm
/// solution L = 0 and the derivative must vanish there within 1e-8.
std::vector<Eigen::MatrixXcd> sld_operators(const DensityOperator& rho,
                                            const std::vector<Eigen::MatrixXcd>& drho,
                                            double support_tol = 1e-10);

/// R_j = rho^{-1} drho_j.  Requires strictly positive rho
/// (min eigenvalue > 1e-10).
std::vector<Eigen::MatrixXcd> rld_operators(const DensityOperator& rho,
                                            const std::vector<Eigen::MatrixXcd>& drho);

/// [F_S]_{jk} = Re tr(L_j L_k rho).
QfiMatrix qfi_sld(const DensityOperator& rho, const std::vector<Eigen::MatrixXcd>& drho,
                  double support_tol = 1e-10);

/// [F_R]_{jk} = tr(rho^{-1} drho_j drho_k).  With support_tol <= 0 the
/// state must be strictly positive (min eigenvalue > 1e-10); a positive
/// support_tol restricts the inverse to eigenvalues above it, for states
/// whose spectrum decays below double precision (truncated Fock oracle).
QfiMatrix qfi_rld(const DensityOperator& rho, const std::vector<Eigen::MatrixXcd>& drho,
                  double support_tol = 0.0);

/// Single-parameter spectral formula for the unitary family generated
/// by Z: sum over eigenpairs of 2 (l_a - l_b)^2 / (l_a + l_b) |<a|Z|b>|^2.
double qfi_unitary_spectral(const DensityOperator& rho, const HermitianMatrix& z);

/// (4/n) sum_j (<psi|Z_j^2|psi> - <psi|Z_j|psi>^2) for a unit vector psi.
double pure_state_mean_qfi(const Eigen::VectorXcd& psi,
                           const std::vector<HermitianMatrix>& generators);

}  // namespace qmetro

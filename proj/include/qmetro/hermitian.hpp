#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "qmetro/errors.hpp"

namespace qmetro {

using Complex = std::complex<double>;

/// Complex square matrix equal to its conjugate transpose.  Inputs are
/// validated against a structural tolerance and then symmetrized as
/// (H + H^dagger)/2 to suppress round-off drift.  Immutable after
/// construction.
class HermitianMatrix {
public:
    explicit HermitianMatrix(Eigen::MatrixXcd m, double tol = 1e-12);

    /// Symmetrize without the tolerance check.  For matrices that are
    /// Hermitian by construction (U f U^dagger reconstructions etc.).
    static HermitianMatrix symmetrized(Eigen::MatrixXcd m);

    static HermitianMatrix identity(int n);
    static HermitianMatrix diagonal(const Eigen::VectorXd& d);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXcd& mat() const { return m_; }

private:
    struct trusted_tag {};
    HermitianMatrix(Eigen::MatrixXcd m, trusted_tag);

    Eigen::MatrixXcd m_;
};

struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;    // ascending
    Eigen::MatrixXcd eigenvectors;  // unitary, columns
};

EigenDecomposition eig_hermitian(const HermitianMatrix& h);

/// U diag(f(x_1), ..., f(x_n)) U^dagger.  The caller is responsible for
/// f's domain; see matrix_power / matrix_log for checked variants.
HermitianMatrix apply_matrix_function(const HermitianMatrix& h,
                                      const std::function<double(double)>& f);

/// x -> x^s, eigenvalues must be strictly positive when s <= 0.
HermitianMatrix matrix_power(const HermitianMatrix& h, double s);
/// x -> ln x, eigenvalues must be strictly positive.
HermitianMatrix matrix_log(const HermitianMatrix& h);
/// x -> 1/x.
HermitianMatrix matrix_inverse(const HermitianMatrix& h);

/// Sum of absolute eigenvalues; equals the trace for PSD input.
double schatten1_norm(const HermitianMatrix& m);

bool is_psd(const HermitianMatrix& h, double tol = 1e-9);

/// A - B positive semi-definite within tol.
bool matrix_geq(const HermitianMatrix& a, const HermitianMatrix& b,
                double tol = 1e-9);

}  // namespace qmetro

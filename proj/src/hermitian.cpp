#include "qmetro/hermitian.hpp"

#include <cmath>
#include <string>

namespace qmetro {

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd m, double tol) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw ValidationError("HermitianMatrix: matrix must be square and nonempty");
    }
    const double drift = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (drift > tol) {
        throw ValidationError("HermitianMatrix: input is not Hermitian (max |H - H^dagger| = " +
                              std::to_string(drift) + ")");
    }
    m_ = 0.5 * (m + m.adjoint().eval());
}

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd m, trusted_tag)
    : m_(0.5 * (m + m.adjoint().eval())) {}

HermitianMatrix HermitianMatrix::symmetrized(Eigen::MatrixXcd m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw ValidationError("HermitianMatrix: matrix must be square and nonempty");
    }
    return HermitianMatrix(std::move(m), trusted_tag{});
}

HermitianMatrix HermitianMatrix::identity(int n) {
    return HermitianMatrix(Eigen::MatrixXcd::Identity(n, n));
}

HermitianMatrix HermitianMatrix::diagonal(const Eigen::VectorXd& d) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d.size(), d.size());
    m.diagonal() = d.cast<Complex>();
    return HermitianMatrix(std::move(m));
}

EigenDecomposition eig_hermitian(const HermitianMatrix& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.mat());
    if (solver.info() != Eigen::Success) {
        throw DomainError("eig_hermitian: eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

HermitianMatrix apply_matrix_function(const HermitianMatrix& h,
                                      const std::function<double(double)>& f) {
    const auto ed = eig_hermitian(h);
    Eigen::VectorXd fx = ed.eigenvalues.unaryExpr(f);
    Eigen::MatrixXcd out = ed.eigenvectors * fx.asDiagonal().toDenseMatrix().cast<Complex>() *
                           ed.eigenvectors.adjoint();
    return HermitianMatrix::symmetrized(std::move(out));
}

namespace {

// Strictly positive spectrum required; eigenvalues at or below the
// round-off floor 1e-12 count as zero.
void require_positive_spectrum(const HermitianMatrix& h, const char* op) {
    const auto ed = eig_hermitian(h);
    if (ed.eigenvalues(0) <= 1e-12) {
        throw DomainError(std::string(op) + ": eigenvalue " +
                          std::to_string(ed.eigenvalues(0)) +
                          " is outside the function domain (must be > 0)");
    }
}

}  // namespace

HermitianMatrix matrix_power(const HermitianMatrix& h, double s) {
    if (s <= 0.0) require_positive_spectrum(h, "matrix_power");
    return apply_matrix_function(h, [s](double x) { return std::pow(x, s); });
}

HermitianMatrix matrix_log(const HermitianMatrix& h) {
    require_positive_spectrum(h, "matrix_log");
    return apply_matrix_function(h, [](double x) { return std::log(x); });
}

HermitianMatrix matrix_inverse(const HermitianMatrix& h) {
    require_positive_spectrum(h, "matrix_inverse");
    return apply_matrix_function(h, [](double x) { return 1.0 / x; });
}

double schatten1_norm(const HermitianMatrix& m) {
    return eig_hermitian(m).eigenvalues.cwiseAbs().sum();
}

bool is_psd(const HermitianMatrix& h, double tol) {
    return eig_hermitian(h).eigenvalues(0) >= -tol;
}

bool matrix_geq(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
    if (a.dim() != b.dim()) {
        throw ValidationError("matrix_geq: dimension mismatch (" + std::to_string(a.dim()) +
                              " vs " + std::to_string(b.dim()) + ")");
    }
    return is_psd(HermitianMatrix::symmetrized(a.mat() - b.mat()), tol);
}

}  // namespace qmetro

#include "qmetro/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qmetro {

namespace {

void require_positive_definite(const QfiMatrix& f, const char* op) {
    const auto ed = eig_hermitian(f.hermitian());
    if (ed.eigenvalues(0) <= 1e-12) {
        throw DomainError(std::string(op) + ": degenerate information matrix (min eigenvalue " +
                          std::to_string(ed.eigenvalues(0)) + ")");
    }
}

void require_nu(int nu, const char* op) {
    if (nu < 1) throw ValidationError(std::string(op) + ": nu must be a positive integer");
}

Eigen::MatrixXd matrix_sqrt_psd(const Eigen::MatrixXd& g) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g);
    const Eigen::VectorXd root = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * root.asDiagonal() * solver.eigenvectors().transpose();
}

// Schatten 1-norm of a real matrix: sum of singular values.
double schatten1_real(const Eigen::MatrixXd& m) {
    return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues().sum();
}

}  // namespace

double fmean_error(const HermitianMatrix& e, const MeanSpec& spec) {
    return weighted_f_mean(e, spec);
}

double fmean_qcrb(const QfiMatrix& f, const MeanSpec& spec, int nu) {
    require_nu(nu, "fmean_qcrb");
    require_positive_definite(f, "fmean_qcrb");
    return 1.0 / (nu * reciprocal_mean(f.hermitian(), spec));
}

double refined_qcrb(const QfiMatrix& f, const MeanSpec& spec, int nu) {
    require_nu(nu, "refined_qcrb");
    require_positive_definite(f, "refined_qcrb");
    const HermitianMatrix f_inv = matrix_inverse(f.hermitian());
    const HermitianMatrix f_of_inv =
        spec.s == 0.0 ? matrix_log(f_inv) : matrix_power(f_inv, spec.s);
    const Eigen::MatrixXd re = f_of_inv.mat().real();
    const Eigen::MatrixXd im = f_of_inv.mat().imag();
    const Eigen::MatrixXd sqrt_g = matrix_sqrt_psd(spec.weight.mat());
    const double value =
        (spec.weight.mat() * re).trace() + schatten1_real(sqrt_g * im * sqrt_g);
    const double bound = spec.s == 0.0 ? std::exp(value) : std::pow(value, 1.0 / spec.s);
    return bound / nu;
}

double weighted_scalar_bound(const QfiMatrix& f, const WeightMatrix& w) {
    require_positive_definite(f, "weighted_scalar_bound");
    if (w.dim() != f.matrix.rows()) {
        throw ValidationError("weighted_scalar_bound: weight dimension mismatch");
    }
    const HermitianMatrix f_inv = matrix_inverse(f.hermitian());
    return std::real((w.mat().cast<Complex>() * f_inv.mat()).trace());
}

bool matrix_qcrb_holds(const HermitianMatrix& e, const QfiMatrix& f, double tol) {
    require_positive_definite(f, "matrix_qcrb_holds");
    return matrix_geq(e, matrix_inverse(f.hermitian()), tol);
}

std::pair<double, double> scalar_trace_lemma_check(const Eigen::MatrixXd& a,
                                                   const Eigen::MatrixXcd& b) {
    const double lhs = a.trace();
    const double rhs = b.real().trace() + schatten1_real(b.imag());
    return {lhs, rhs};
}

BoundReport make_report(const std::optional<QfiMatrix>& sld,
                        const std::optional<QfiMatrix>& rld, const MeanSpec& spec, int nu) {
    BoundReport rep;
    rep.s = spec.s;
    rep.nu = nu;
    double best = -std::numeric_limits<double>::infinity();
    if (sld) {
        rep.plain_bound_sld = fmean_qcrb(*sld, spec, nu);
        best = std::max(best, rep.plain_bound_sld);
    }
    if (rld) {
        rep.plain_bound_rld = fmean_qcrb(*rld, spec, nu);
        rep.refined_bound_rld = refined_qcrb(*rld, spec, nu);
        best = std::max(best, rep.refined_bound_rld);
    }
    if (std::isfinite(best)) rep.best = best;
    return rep;
}

}  // namespace qmetro

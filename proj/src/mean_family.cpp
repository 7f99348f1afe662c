#include "qmetro/mean_family.hpp"

#include <cmath>
#include <string>

namespace qmetro {

WeightMatrix::WeightMatrix(Eigen::MatrixXd g) {
    if (g.rows() != g.cols() || g.rows() == 0) {
        throw ValidationError("WeightMatrix: matrix must be square and nonempty");
    }
    if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw ValidationError("WeightMatrix: matrix is not symmetric");
    }
    g = 0.5 * (g + g.transpose().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g);
    if (solver.eigenvalues()(0) < -1e-10) {
        throw ValidationError("WeightMatrix: matrix is not positive semi-definite (min eigenvalue " +
                              std::to_string(solver.eigenvalues()(0)) + ")");
    }
    const double tr = g.trace();
    if (tr <= 1e-12) {
        throw ValidationError("WeightMatrix: trace must be positive");
    }
    if (std::abs(tr - 1.0) > 1e-10) {
        g /= tr;
        renormalized_ = true;
    }
    g_ = std::move(g);
}

WeightMatrix WeightMatrix::uniform(int n) {
    return WeightMatrix(Eigen::MatrixXd::Identity(n, n) / n);
}

MeanSpec::MeanSpec(double s_, WeightMatrix weight_) : s(s_), weight(std::move(weight_)) {
    if (!(s >= -1.0 && s <= 1.0)) {
        throw ValidationError("MeanSpec: s must lie in [-1, 1], got " + std::to_string(s));
    }
}

namespace {

// Classical form of Eq-style f-means: probabilities p_j = <v_j| G |v_j>
// against the eigenpairs (x_j, v_j) of X.
double classical_f_mean(const Eigen::VectorXd& x, const Eigen::VectorXd& p, double s) {
    if (s == 0.0) {
        double acc = 0.0;
        for (int j = 0; j < x.size(); ++j) acc += p(j) * std::log(x(j));
        return std::exp(acc);
    }
    double acc = 0.0;
    for (int j = 0; j < x.size(); ++j) acc += p(j) * std::pow(x(j), s);
    return std::pow(acc, 1.0 / s);
}

}  // namespace

double weighted_f_mean(const HermitianMatrix& x, const MeanSpec& spec) {
    if (x.dim() != spec.weight.dim()) {
        throw ValidationError("weighted_f_mean: matrix dim " + std::to_string(x.dim()) +
                              " does not match weight dim " + std::to_string(spec.weight.dim()));
    }
    auto ed = eig_hermitian(x);
    if (ed.eigenvalues(0) < -1e-10) {
        throw DomainError("weighted_f_mean: matrix is not PSD (min eigenvalue " +
                          std::to_string(ed.eigenvalues(0)) + ")");
    }
    if (spec.s <= 0.0 && ed.eigenvalues(0) <= 1e-12) {
        throw DomainError("weighted_f_mean: singular matrix with s <= 0 (min eigenvalue " +
                          std::to_string(ed.eigenvalues(0)) + ")");
    }
    Eigen::VectorXd ev = ed.eigenvalues.cwiseMax(0.0);
    const Eigen::MatrixXcd gc = spec.weight.mat().cast<Complex>();
    Eigen::VectorXd p(x.dim());
    for (int j = 0; j < x.dim(); ++j) {
        p(j) = std::real(Complex(ed.eigenvectors.col(j).adjoint() * gc * ed.eigenvectors.col(j)));
    }
    return classical_f_mean(ev, p, spec.s);
}

double reciprocal_mean(const HermitianMatrix& x, const MeanSpec& spec) {
    auto ed = eig_hermitian(x);
    if (ed.eigenvalues(0) <= 1e-12) {
        throw DomainError("reciprocal_mean: singular matrix (min eigenvalue " +
                          std::to_string(ed.eigenvalues(0)) + ")");
    }
    if (x.dim() != spec.weight.dim()) {
        throw ValidationError("reciprocal_mean: matrix dim does not match weight dim");
    }
    const Eigen::MatrixXcd gc = spec.weight.mat().cast<Complex>();
    Eigen::VectorXd p(x.dim());
    for (int j = 0; j < x.dim(); ++j) {
        p(j) = std::real(Complex(ed.eigenvectors.col(j).adjoint() * gc * ed.eigenvectors.col(j)));
    }
    const Eigen::VectorXd inv = ed.eigenvalues.cwiseInverse();
    return 1.0 / classical_f_mean(inv, p, spec.s);
}

}  // namespace qmetro

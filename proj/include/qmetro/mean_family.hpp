#pragma once

#include <Eigen/Dense>

#include "qmetro/hermitian.hpp"

namespace qmetro {

/// Real-symmetric PSD weight matrix with unit trace.  Inputs with a
/// different (positive) trace are normalized on ingestion and flagged.
class WeightMatrix {
public:
    explicit WeightMatrix(Eigen::MatrixXd g);
    static WeightMatrix uniform(int n);

    int dim() const { return static_cast<int>(g_.rows()); }
    const Eigen::MatrixXd& mat() const { return g_; }
    bool was_renormalized() const { return renormalized_; }

private:
    Eigen::MatrixXd g_;
    bool renormalized_ = false;
};

/// The f-function selector: f(x) = x^s for s in [-1,1]\{0}, f = ln for s = 0.
struct MeanSpec {
    double s;
    WeightMatrix weight;

    MeanSpec(double s_, WeightMatrix weight_);
};

/// M_{f,G}(X) = f^{-1}(tr G f(X)).  Requires X PSD, strictly positive
/// definite when s <= 0.  The result lies between the extreme eigenvalues.
double weighted_f_mean(const HermitianMatrix& x, const MeanSpec& spec);

/// weighted_f_mean(X^{-1}, spec)^{-1}; for power means this is M_{-s,G}(X).
double reciprocal_mean(const HermitianMatrix& x, const MeanSpec& spec);

}  // namespace qmetro

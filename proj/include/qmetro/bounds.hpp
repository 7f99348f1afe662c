#pragma once

#include <Eigen/Dense>
#include <limits>
#include <optional>
#include <utility>

#include "qmetro/mean_family.hpp"
#include "qmetro/qfi.hpp"

namespace qmetro {

/// Per-(s, G, nu) lower bounds.  Missing inputs (no SLD or no RLD
/// matrix supplied) leave the corresponding fields NaN; "best" is the
/// max over available candidates: plain SLD bound and refined RLD bound.
struct BoundReport {
    double s = 0.0;
    int nu = 1;
    double plain_bound_sld = std::numeric_limits<double>::quiet_NaN();
    double plain_bound_rld = std::numeric_limits<double>::quiet_NaN();
    double refined_bound_rld = std::numeric_limits<double>::quiet_NaN();
    double best = std::numeric_limits<double>::quiet_NaN();
};

/// f-mean of an error-covariance matrix: weighted_f_mean(E, spec).
double fmean_error(const HermitianMatrix& e, const MeanSpec& spec);

/// Plain f-mean QCRB: 1 / (nu * M_{-s,G}(F)).
double fmean_qcrb(const QfiMatrix& f, const MeanSpec& spec, int nu);

/// Refined bound for complex (RLD) information matrices:
/// nu^{-1} f^{-1}( tr G Re f(F^{-1}) + || sqrt(G) Im f(F^{-1}) sqrt(G) ||_1 ).
/// Coincides with fmean_qcrb when Im F = 0.
double refined_qcrb(const QfiMatrix& f, const MeanSpec& spec, int nu);

/// tr W F^{-1}.
double weighted_scalar_bound(const QfiMatrix& f, const WeightMatrix& w);

/// matrix_geq(E, F^{-1}, tol).
bool matrix_qcrb_holds(const HermitianMatrix& e, const QfiMatrix& f, double tol);

/// Returns (tr A, tr Re B + ||Im B||_1); the caller establishes A >= B.
std::pair<double, double> scalar_trace_lemma_check(const Eigen::MatrixXd& a,
                                                   const Eigen::MatrixXcd& b);

BoundReport make_report(const std::optional<QfiMatrix>& sld,
                        const std::optional<QfiMatrix>& rld, const MeanSpec& spec, int nu);

}  // namespace qmetro

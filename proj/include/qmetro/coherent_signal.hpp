#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qmetro/bounds.hpp"
#include "qmetro/states.hpp"

namespace qmetro {

/// Complex coherent signal mu in a thermal background with mean photon
/// number eta; theta_1 = Re mu, theta_2 = Im mu.
struct SignalModel {
    double eta;
    std::complex<double> mu;
};

/// Closed-form information matrices:
///   F_S = 4/(2 eta + 1) I_2,
///   F_R = 1/(eta (eta+1)) [[2 eta + 1, -i], [i, 2 eta + 1]].
std::pair<QfiMatrix, QfiMatrix> analytic_qfis(double eta);

struct SignalBound {
    double sld_bound;     // (2 eta + 1)/4, independent of s
    double rld_plain;     // 1 / M_{-s}(F_R)
    double rld_refined;   // eta/2 for s < 0, (eta+1)/2 for s >= 0
    double overall;       // (2 eta + 1)/4 for s < 0, (eta+1)/2 for s >= 0
};

SignalBound analytic_bound(double eta, double s);

/// Displaced thermal state D(mu) rho_th(eta) D(mu)^dagger in the
/// n_trunc-dimensional Fock basis, renormalized to unit trace.  Errors
/// if the pre-normalization trace deficit exceeds 1e-6.
DensityOperator displaced_thermal_state(double eta, std::complex<double> mu, int n_trunc);

/// Two-parameter family over (Re mu, Im mu) with central finite
/// differences, step 1e-4.  The numerical oracle for the closed forms.
ParametricFamily displaced_thermal_family(double eta, int n_trunc);

struct RegionRecord {
    double e1;
    double e2;
    bool forbidden;
    double binding_s;  // most-violating s; NaN when permitted
};

/// Classifies eigen-error combinations (E1, E2) against the overall
/// bound for every s in s_set.  Records are row-major over the grid
/// (e1 outer, e2 inner).
std::vector<RegionRecord> region_scan(double eta, const std::vector<double>& e1_grid,
                                      const std::vector<double>& e2_grid,
                                      const std::vector<double>& s_set);

}  // namespace qmetro

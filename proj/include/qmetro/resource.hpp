#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qmetro/mean_family.hpp"
#include "qmetro/states.hpp"

namespace qmetro {

/// f-mean of the SLD QFI matrix of the unitary family generated by the
/// given Hermitian operators, at theta = 0.  Vanishes for states that
/// commute with every generator.  s <= 0 with a singular information
/// matrix is a domain error.
double asymmetry(const DensityOperator& rho, const std::vector<HermitianMatrix>& generators,
                 const MeanSpec& spec);

/// (4/n)(1 - sum_j |<j|psi>|^4) against the computational basis.
double coherence_pure(const Eigen::VectorXcd& psi);

/// Exact qubit convex roof: (tr sigma_x rho)^2 + (tr sigma_y rho)^2.
double coherence_qubit(const DensityOperator& rho);

/// Stochastic upper bound on the arithmetic-mean-QFI convex roof:
/// min over sampled ensemble decompositions (eigen-ensemble mixed
/// through random isometries, alternating global draws and annealed
/// perturbations of the incumbent) of sum_l p_l coherence_pure(psi_l).
/// Deterministic given seed; non-increasing in trials for a fixed
/// seed-stream prefix.
double coherence_upper_bound(const DensityOperator& rho, int trials, std::uint64_t seed);

/// 4(n-1)/n^2, the maximum over all n-dimensional states.
double coherence_max(int n);

}  // namespace qmetro

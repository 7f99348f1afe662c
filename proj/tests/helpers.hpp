#pragma once

// Shared randomized-input generators for the test suites.  Every
// generator takes an explicit seed so shards stay deterministic.

#include <Eigen/Dense>
#include <random>

#include "qmetro/hermitian.hpp"

namespace qmetro::testing {

inline Eigen::MatrixXcd gaussian_complex(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
    }
    return m;
}

inline HermitianMatrix random_hermitian(int dim, std::mt19937_64& rng) {
    const Eigen::MatrixXcd g = gaussian_complex(dim, dim, rng);
    return HermitianMatrix::symmetrized(0.5 * (g + g.adjoint()));
}

/// Random PD matrix with spectrum floored at `floor`.
inline HermitianMatrix random_positive(int dim, std::mt19937_64& rng, double floor = 1e-3) {
    const Eigen::MatrixXcd g = gaussian_complex(dim, dim, rng);
    return HermitianMatrix::symmetrized(g * g.adjoint() +
                                        floor * Eigen::MatrixXcd::Identity(dim, dim));
}

/// Random real-symmetric PSD matrix (unnormalized; WeightMatrix normalizes).
inline Eigen::MatrixXd random_real_psd(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXd a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) a(i, j) = g(rng);
    }
    return a * a.transpose() + 1e-6 * Eigen::MatrixXd::Identity(dim, dim);
}

inline Eigen::VectorXcd random_pure_state(int dim, std::mt19937_64& rng) {
    Eigen::VectorXcd psi = gaussian_complex(dim, 1, rng);
    psi.normalize();
    return psi;
}

}  // namespace qmetro::testing

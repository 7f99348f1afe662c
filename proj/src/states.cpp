#include "qmetro/states.hpp"

#include <cmath>
#include <random>
#include <string>

namespace qmetro {

DensityOperator::DensityOperator(HermitianMatrix m) : rho_(std::move(m)) {
    const auto ed = eig_hermitian(rho_);
    if (ed.eigenvalues(0) < -1e-10) {
        throw ValidationError("DensityOperator: matrix is not PSD (min eigenvalue " +
                              std::to_string(ed.eigenvalues(0)) + ")");
    }
    const double tr = std::real(rho_.mat().trace());
    if (std::abs(tr - 1.0) > 1e-10) {
        throw ValidationError("DensityOperator: trace must be 1, got " + std::to_string(tr));
    }
}

KrausChannel::KrausChannel(std::vector<Eigen::MatrixXcd> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) throw ValidationError("KrausChannel: needs at least one Kraus operator");
    const auto rows = ops_.front().rows();
    const auto cols = ops_.front().cols();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(cols, cols);
    for (const auto& k : ops_) {
        if (k.rows() != rows || k.cols() != cols) {
            throw ValidationError("KrausChannel: Kraus operators must share one shape");
        }
        sum += k.adjoint() * k;
    }
    const double drift =
        (sum - Eigen::MatrixXcd::Identity(cols, cols)).cwiseAbs().maxCoeff();
    if (drift > 1e-10) {
        throw ValidationError("KrausChannel: completeness sum K^dagger K differs from identity by " +
                              std::to_string(drift));
    }
}

Eigen::MatrixXcd exp_i(const HermitianMatrix& h) {
    const auto ed = eig_hermitian(h);
    Eigen::VectorXcd phases(ed.eigenvalues.size());
    for (int j = 0; j < phases.size(); ++j) {
        phases(j) = std::exp(Complex(0.0, ed.eigenvalues(j)));
    }
    return ed.eigenvectors * phases.asDiagonal() * ed.eigenvectors.adjoint();
}

namespace {

Eigen::MatrixXcd commutator_derivative(const HermitianMatrix& z, const Eigen::MatrixXcd& rho) {
    return Complex(0.0, 1.0) * (z.mat() * rho - rho * z.mat());
}

}  // namespace

ParametricFamily unitary_family(const DensityOperator& rho0,
                                std::vector<HermitianMatrix> generators, bool commuting) {
    if (generators.empty()) throw ValidationError("unitary_family: no generators given");
    for (const auto& z : generators) {
        if (z.dim() != rho0.dim()) {
            throw ValidationError("unitary_family: generator dimension does not match the state");
        }
    }
    if (commuting) {
        for (size_t j = 0; j < generators.size(); ++j) {
            for (size_t k = j + 1; k < generators.size(); ++k) {
                const Eigen::MatrixXcd comm = generators[j].mat() * generators[k].mat() -
                                              generators[k].mat() * generators[j].mat();
                if (comm.cwiseAbs().maxCoeff() > 1e-10) {
                    throw ValidationError("unitary_family: generators " + std::to_string(j) +
                                          " and " + std::to_string(k) +
                                          " do not commute but commuting=true was requested");
                }
            }
        }
    }

    const int n = static_cast<int>(generators.size());
    auto evaluate = [rho0, generators, n](const Eigen::VectorXd& theta) {
        if (theta.size() != n) {
            throw ValidationError("unitary_family: theta has wrong length");
        }
        Eigen::MatrixXcd exponent = Eigen::MatrixXcd::Zero(rho0.dim(), rho0.dim());
        for (int j = 0; j < n; ++j) exponent += theta(j) * generators[j].mat();
        const Eigen::MatrixXcd u = exp_i(HermitianMatrix::symmetrized(exponent));
        return DensityOperator(HermitianMatrix::symmetrized(u * rho0.mat() * u.adjoint()));
    };

    auto derivatives = [evaluate, generators, commuting, n](const Eigen::VectorXd& theta) {
        std::vector<Eigen::MatrixXcd> out;
        out.reserve(n);
        if (commuting || theta.cwiseAbs().maxCoeff() < 1e-14) {
            const Eigen::MatrixXcd rho = evaluate(theta).mat();
            for (int j = 0; j < n; ++j) out.push_back(commutator_derivative(generators[j], rho));
        } else {
            const double h = 1e-5;
            for (int j = 0; j < n; ++j) {
                Eigen::VectorXd tp = theta, tm = theta;
                tp(j) += h;
                tm(j) -= h;
                out.push_back((evaluate(tp).mat() - evaluate(tm).mat()) / (2.0 * h));
            }
        }
        return out;
    };

    return ParametricFamily{n, std::move(evaluate), std::move(derivatives)};
}

ParametricFamily bloch_family(double z0) {
    auto evaluate = [z0](const Eigen::VectorXd& theta) {
        if (theta.size() != 2) throw ValidationError("bloch_family: theta has wrong length");
        Eigen::MatrixXcd m = 0.5 * (Eigen::MatrixXcd::Identity(2, 2) + theta(0) * pauli_x() +
                                    theta(1) * pauli_y() + z0 * pauli_z());
        return DensityOperator(HermitianMatrix::symmetrized(std::move(m)));
    };
    auto derivatives = [](const Eigen::VectorXd&) {
        return std::vector<Eigen::MatrixXcd>{0.5 * pauli_x(), 0.5 * pauli_y()};
    };
    return ParametricFamily{2, std::move(evaluate), std::move(derivatives)};
}

DensityOperator apply_channel(const KrausChannel& ch, const DensityOperator& rho) {
    return DensityOperator(HermitianMatrix::symmetrized(apply_channel(ch, rho.mat())));
}

Eigen::MatrixXcd apply_channel(const KrausChannel& ch, const Eigen::MatrixXcd& m) {
    if (m.rows() != ch.ops().front().cols()) {
        throw ValidationError("apply_channel: dimension mismatch");
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(ch.dim(), ch.dim());
    for (const auto& k : ch.ops()) out += k * m * k.adjoint();
    return out;
}

namespace {

Eigen::MatrixXcd gaussian_complex(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const double re = g(rng);
            const double im = g(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

// Thin Q factor with the Haar phase fix (positive diagonal of R).
Eigen::MatrixXcd random_isometry(int rows, int cols, std::mt19937_64& rng) {
    const Eigen::MatrixXcd a = gaussian_complex(rows, cols, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
    const Eigen::MatrixXcd r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
    for (int j = 0; j < cols; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

}  // namespace

DensityOperator random_density(int dim, int rank, std::uint64_t seed) {
    if (rank < 1 || rank > dim) throw ValidationError("random_density: need 1 <= rank <= dim");
    std::mt19937_64 rng(seed);
    const Eigen::MatrixXcd g = gaussian_complex(dim, rank, rng);
    Eigen::MatrixXcd m = g * g.adjoint();
    m /= m.trace();
    return DensityOperator(HermitianMatrix::symmetrized(std::move(m)));
}

KrausChannel random_channel(int dim, int n_kraus, std::uint64_t seed) {
    if (n_kraus < 1) throw ValidationError("random_channel: need n_kraus >= 1");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const Eigen::MatrixXcd v = random_isometry(dim * n_kraus, dim, rng);
    std::vector<Eigen::MatrixXcd> ops;
    ops.reserve(n_kraus);
    for (int l = 0; l < n_kraus; ++l) ops.push_back(v.middleRows(l * dim, dim));
    return KrausChannel(std::move(ops));
}

Eigen::MatrixXcd random_unitary(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
    return random_isometry(dim, dim, rng);
}

Eigen::MatrixXcd pauli_x() {
    Eigen::MatrixXcd m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Eigen::MatrixXcd pauli_y() {
    Eigen::MatrixXcd m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

Eigen::MatrixXcd pauli_z() {
    Eigen::MatrixXcd m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

}  // namespace qmetro

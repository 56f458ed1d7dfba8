#include "oscnet/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace oscnet {

Eigen::VectorXd thermal_occupation(const Eigen::VectorXd& Omega, double T) {
    if (T < 0.0) throw std::invalid_argument("thermal_occupation: T >= 0 required");
    Eigen::VectorXd n = Eigen::VectorXd::Zero(Omega.size());
    if (T == 0.0) return n;
    for (int i = 0; i < Omega.size(); ++i) n(i) = 1.0 / std::expm1(Omega(i) / T);
    return n;
}

CovarianceState thermal_eigenbasis(const EigenSystem& eig, double T) {
    const int n = eig.n();
    const Eigen::VectorXd occ = thermal_occupation(eig.Omega, T);
    CovarianceState out;
    out.sigma = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        out.sigma(i, i) = (occ(i) + 0.5) / eig.Omega(i);
        out.sigma(n + i, n + i) = (occ(i) + 0.5) * eig.Omega(i);
    }
    out.basis = Basis::eigenmode;
    out.mode_frequencies = eig.Omega;
    return out;
}

static Basis source_basis(PropagatorBasis b) {
    switch (b) {
        case PropagatorBasis::eigen_to_eigen:
        case PropagatorBasis::eigen_to_network:
            return Basis::eigenmode;
        case PropagatorBasis::network_to_network:
            return Basis::network;
    }
    return Basis::network;
}

static Basis target_basis(PropagatorBasis b) {
    return b == PropagatorBasis::eigen_to_eigen ? Basis::eigenmode : Basis::network;
}

CovarianceState evolve(const CovarianceState& cov, const SymplecticPropagator& prop) {
    if (cov.sigma.rows() != prop.S.rows())
        throw std::invalid_argument("evolve: dimension mismatch");
    if (cov.basis != source_basis(prop.basis))
        throw std::invalid_argument("evolve: basis mismatch between state and propagator");
    CovarianceState out;
    out.sigma = prop.S * cov.sigma * prop.S.transpose();
    out.basis = target_basis(prop.basis);
    out.mode_frequencies = cov.mode_frequencies;
    return out;
}

CovarianceState two_mode_squeezed_thermal(double r, double nA, double nB) {
    if (r < 0.0 || nA < 0.0 || nB < 0.0)
        throw std::invalid_argument("two_mode_squeezed_thermal: r, nA, nB >= 0 required");
    const double ch = std::cosh(r), sh = std::sinh(r);
    Eigen::MatrixXd S2 = Eigen::MatrixXd::Zero(4, 4);
    // (q_A, q_B, p_A, p_B)
    S2(0, 0) = ch; S2(0, 1) = sh;
    S2(1, 0) = sh; S2(1, 1) = ch;
    S2(2, 2) = ch; S2(2, 3) = -sh;
    S2(3, 2) = -sh; S2(3, 3) = ch;
    Eigen::VectorXd d(4);
    d << nA + 0.5, nB + 0.5, nA + 0.5, nB + 0.5;
    CovarianceState out;
    out.sigma = S2 * d.asDiagonal() * S2.transpose();
    out.basis = Basis::dimensionless;
    return out;
}

CovarianceState to_dimensionless(const CovarianceState& cov, const Eigen::VectorXd& freqs) {
    const int n = cov.modes();
    if (freqs.size() != n) throw std::invalid_argument("to_dimensionless: frequency count");
    if ((freqs.array() <= 0.0).any())
        throw std::invalid_argument("to_dimensionless: positive frequencies required");
    Eigen::VectorXd d(2 * n);
    d.head(n) = freqs.array().sqrt();
    d.tail(n) = freqs.array().rsqrt();
    CovarianceState out;
    out.sigma = d.asDiagonal() * cov.sigma * d.asDiagonal();
    out.basis = Basis::dimensionless;
    out.mode_frequencies = freqs;
    return out;
}

CovarianceState from_dimensionless(const CovarianceState& cov, const Eigen::VectorXd& freqs,
                                   Basis target) {
    const int n = cov.modes();
    if (freqs.size() != n) throw std::invalid_argument("from_dimensionless: frequency count");
    if ((freqs.array() <= 0.0).any())
        throw std::invalid_argument("from_dimensionless: positive frequencies required");
    Eigen::VectorXd d(2 * n);
    d.head(n) = freqs.array().rsqrt();
    d.tail(n) = freqs.array().sqrt();
    CovarianceState out;
    out.sigma = d.asDiagonal() * cov.sigma * d.asDiagonal();
    out.basis = target;
    out.mode_frequencies = freqs;
    return out;
}

double excitation_number(const CovarianceState& cov, int mode, double omega) {
    if (omega <= 0.0) throw std::invalid_argument("excitation_number: omega > 0 required");
    return 0.5 * (omega * cov.qq(mode) + cov.pp(mode) / omega) - 0.5;
}

Eigen::VectorXd symplectic_eigenvalues(const CovarianceState& cov) {
    const int n = cov.modes();
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    J.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    J.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> root(cov.sigma);
    if (root.eigenvalues()(0) <= 0.0)
        throw std::runtime_error("symplectic_eigenvalues: sigma not positive definite");
    const Eigen::MatrixXd half = root.operatorSqrt();
    const Eigen::MatrixXd K = half * J * half;  // real antisymmetric
    // eigenvalues of K^T K are the squared symplectic eigenvalues, doubled
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sq(K.transpose() * K);
    Eigen::VectorXd nu(n);
    for (int i = 0; i < n; ++i) {
        const double a = std::sqrt(std::max(sq.eigenvalues()(2 * i), 0.0));
        const double b = std::sqrt(std::max(sq.eigenvalues()(2 * i + 1), 0.0));
        nu(i) = 0.5 * (a + b);  // paired values agree to solver accuracy
    }
    constexpr double tol = 1e-9;
    if (nu(0) < 0.5 - tol)
        throw std::runtime_error("symplectic_eigenvalues: unphysical state (nu < 1/2)");
    return nu;
}

double physicality_margin(const CovarianceState& cov) {
    const int n = cov.modes();
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    J.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    J.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> root(cov.sigma);
    const Eigen::MatrixXd half = root.operatorSqrt();
    const Eigen::MatrixXd K = half * J * half;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sq(K.transpose() * K);
    return std::sqrt(std::max(sq.eigenvalues()(0), 0.0)) - 0.5;
}

}  // namespace oscnet

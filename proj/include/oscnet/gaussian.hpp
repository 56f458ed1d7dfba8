#pragma once

#include <Eigen/Dense>

#include "oscnet/hamiltonian.hpp"

namespace oscnet {

enum class Basis { network, eigenmode, dimensionless };

// Zero-mean Gaussian state as a 2M x 2M covariance of symmetrized second
// moments in {q..., p...} ordering. mode_frequencies records the frequencies
// used for unit conversion where that is meaningful (empty otherwise).
struct CovarianceState {
    Eigen::MatrixXd sigma;
    Basis basis = Basis::network;
    Eigen::VectorXd mode_frequencies;

    int modes() const { return static_cast<int>(sigma.rows()) / 2; }
    double qq(int i) const { return sigma(i, i); }
    double pp(int i) const { return sigma(modes() + i, modes() + i); }
};

// Thermal occupation (exp(Omega/T) - 1)^-1 per mode; zero at T = 0.
Eigen::VectorXd thermal_occupation(const Eigen::VectorXd& Omega, double T);

// Stationary thermal state of the network: diagonal in the eigenmode basis
// with <Q_i^2> = (n_i + 1/2)/Omega_i, <P_i^2> = (n_i + 1/2) Omega_i.
CovarianceState thermal_eigenbasis(const EigenSystem& eig, double T);

// sigma -> S sigma S^T; checks dimensions and that the propagator's source
// basis matches the state.
CovarianceState evolve(const CovarianceState& cov, const SymplecticPropagator& prop);

// Two-mode squeezed thermal state, dimensionless units (vacuum = I/2),
// ordering (q_A, q_B, p_A, p_B). Built as S2(r) diag-thermal S2(r)^T.
CovarianceState two_mode_squeezed_thermal(double r, double nA, double nB);

// x_i = sqrt(w_i) q_i, y_i = p_i / sqrt(w_i); vacuum at w maps to I/2.
CovarianceState to_dimensionless(const CovarianceState& cov, const Eigen::VectorXd& freqs);
CovarianceState from_dimensionless(const CovarianceState& cov, const Eigen::VectorXd& freqs,
                                   Basis target);

// <n> = (w <q^2> + <p^2>/w)/2 - 1/2 for the given mode.
double excitation_number(const CovarianceState& cov, int mode, double omega);

// Moduli of the eigenvalues of i J sigma, deduplicated to M values. Values
// below 1/2 - tol signal an unphysical state.
Eigen::VectorXd symplectic_eigenvalues(const CovarianceState& cov);

// Smallest symplectic eigenvalue minus 1/2; negative beyond tolerance means
// the uncertainty relation is violated.
double physicality_margin(const CovarianceState& cov);

}  // namespace oscnet

#pragma once

#include <Eigen/Dense>

#include "oscnet/gaussian.hpp"
#include "oscnet/hamiltonian.hpp"

namespace oscnet {

// Open system oscillator (frequency omega_S) attached to network node l with
// interaction -k q_S q_l. B is the (N+1)x(N+1) quadratic form of the total
// Hamiltonian in the (eigenmode..., system) coordinates, O its orthogonal
// diagonalizer and f the total-system eigenfrequencies.
struct CoupledSystem {
    EigenSystem network;
    double omega_S = 0.0;
    double k = 0.0;
    int node = 0;  // attached network node, 0-based
    Eigen::MatrixXd B;
    Eigen::MatrixXd O;
    Eigen::VectorXd f;

    int n_network() const { return network.n(); }
    // coupling strengths to the network eigenmodes, g_i = -k K_{l,i}
    Eigen::VectorXd eigenmode_couplings() const {
        return -k * network.K.row(node).transpose();
    }
};

CoupledSystem attach(const EigenSystem& eig, double omega_S, double k, int node);

// Symplectic propagator of the total system, 2(N+1) dimensional. Source basis
// is always (eigenmode..., system); the network target multiplies the blocks
// by the embedded K.
SymplecticPropagator total_propagator(const CoupledSystem& cs, double t,
                                      PropagatorBasis basis = PropagatorBasis::eigen_to_eigen);

// Block direct sum of the network thermal state (eigenmode basis, N modes)
// and the two-mode probe (dimensionless), giving N+2 modes ordered
// (Q_1..Q_N, q_S, q_B | P...). Probe mode A is the system; both probe modes
// convert to dimensionful units at omega_S. The ancilla B never evolves.
CovarianceState joint_initial(const CoupledSystem& cs, const CovarianceState& network_state,
                              const CovarianceState& probe_AB);

// Evolves a joint_initial state: Eq-(3.4)-type propagator on the coupled
// modes, identity on the ancilla quadratures.
CovarianceState evolve_joint(const CoupledSystem& cs, const CovarianceState& joint, double t);

// Extracts the 4x4 (q_S, q_B, p_S, p_B) block of a joint state.
CovarianceState probe_block(const CovarianceState& joint);

// Reduced one-mode Gaussian channel sigma_S(t) = C sigma_S(0) C^T + L.
// The network state must be diagonal in the eigenmode basis.
struct GaussianChannel {
    Eigen::Matrix2d C;
    Eigen::Matrix2d L;
    double t = 0.0;
};

GaussianChannel channel(const CoupledSystem& cs, const CovarianceState& network_state, double t);

// <H_S + H_E + H_I> evaluated from a joint covariance (ancilla excluded);
// conserved under evolve_joint.
double total_energy_coupled(const CoupledSystem& cs, const CovarianceState& joint);

}  // namespace oscnet

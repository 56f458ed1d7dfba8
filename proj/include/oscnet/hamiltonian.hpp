#pragma once

#include <Eigen/Dense>

#include "oscnet/graph.hpp"

namespace oscnet {

// Network of unit-mass oscillators: bare angular frequencies omega_i (> 0)
// plus the coupling graph (hbar = 1 throughout).
struct OscillatorNetwork {
    int n = 0;
    Eigen::VectorXd omega;
    WeightedGraph graph;

    OscillatorNetwork() = default;
    OscillatorNetwork(Eigen::VectorXd omega_, WeightedGraph graph_);

    // effective frequencies: omega_eff_i^2 = omega_i^2 + sum_j g_ij
    Eigen::VectorXd effective_frequencies() const;
};

// Convenience constructor for the homogeneous ensembles: every oscillator at
// omega0.
OscillatorNetwork uniform_network(double omega0, WeightedGraph graph);

// A_ij = delta_ij * omega_eff_i^2 / 2 - (1 - delta_ij) * g_ij / 2
Eigen::MatrixXd assemble_A(const OscillatorNetwork& net);

// Same matrix built from the graph-Laplacian split A = diag(omega^2)/2 + L/2;
// kept as a second route for consistency checks.
Eigen::MatrixXd assemble_A_laplacian(const OscillatorNetwork& net);

// Orthogonal diagonalizer K (columns are eigenvectors, deterministic sign:
// largest-magnitude component positive) and eigenfrequencies
// Omega_i = sqrt(2 eig_i(A)) in ascending order.
struct EigenSystem {
    Eigen::MatrixXd K;
    Eigen::VectorXd Omega;
    int n() const { return static_cast<int>(Omega.size()); }
};

EigenSystem diagonalize(const Eigen::MatrixXd& A);

enum class PropagatorBasis { eigen_to_eigen, eigen_to_network, network_to_network };

// Real 2M x 2M matrix S(t) with S J S^T = J in the fixed {q..., p...}
// ordering.
struct SymplecticPropagator {
    Eigen::MatrixXd S;
    double t = 0.0;
    PropagatorBasis basis = PropagatorBasis::eigen_to_eigen;
};

// Free evolution of the decoupled eigenmodes:
// [[cos, sin/Omega], [-Omega sin, cos]] blockwise diagonal.
SymplecticPropagator propagator_eigenmode(const EigenSystem& eig, double t);

// Network-basis propagator K D K^T blocks.
SymplecticPropagator propagator_network(const EigenSystem& eig, double t);

// <H_E> = tr(A cov_qq) + tr(cov_pp)/2 for a zero-mean state in the network
// basis.
double total_energy(const OscillatorNetwork& net, const Eigen::MatrixXd& cov);

// max |S J S^T - J|; test surface for the symplecticity contract
double symplecticity_residual(const Eigen::MatrixXd& S);

}  // namespace oscnet

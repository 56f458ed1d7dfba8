#pragma once

#include <Eigen/Dense>

#include "oscnet/gaussian.hpp"
#include "oscnet/hamiltonian.hpp"

namespace oscnet {

// Per-oscillator excitation numbers along a time grid, with the t=0 values
// kept as the reference for difference maps.
struct TransportRecord {
    Eigen::VectorXd times;
    Eigen::MatrixXd excitations;  // rows: time samples, cols: oscillators
    Eigen::VectorXd reference;    // n_j(0)

    Eigen::VectorXd excess(int step) const {
        return excitations.row(step).transpose() - reference;
    }
};

// Stationary eigenmode vacuum expressed in the network basis with one thermal
// quantum injected at `site`: the site's local variances are replaced by
// (1 + 1/2)/w_eff and (1 + 1/2) w_eff.
CovarianceState make_local_excitation(const OscillatorNetwork& net, const EigenSystem& eig,
                                      int site);

// Evolves the initial state with the exact network propagator and records
// n_j(t) at every grid point, measured against each site's effective
// frequency.
TransportRecord excitation_trajectory(const OscillatorNetwork& net, const EigenSystem& eig,
                                      const CovarianceState& initial,
                                      const Eigen::VectorXd& time_grid);

// (sum_j d_j)^2 / sum_j d_j^2 with d_j the positive excitation excess.
double participation_ratio(const TransportRecord& rec, int step);

// Largest site index whose excess reaches `frac` of the maximum excess at the
// given step; tracks the leading edge of a propagating excitation.
int front_position(const TransportRecord& rec, int step, double frac = 0.1);

// Normalized L2 distance between two excitation-difference maps.
double transport_distance(const TransportRecord& a, const TransportRecord& b);

}  // namespace oscnet

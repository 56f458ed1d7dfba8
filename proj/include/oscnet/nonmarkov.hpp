#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscnet/gaussian.hpp"
#include "oscnet/opensys.hpp"

namespace oscnet {

// Gaussian interferometric power of a two-mode state (dimensionless units,
// ordering (q_A, q_B, p_A, p_B)). Closed form in the local symplectic
// invariants of the covariance matrix; vanishes on product states and is
// invariant under local symplectic transformations. generator_mode selects
// which mode carries the estimation phase (0 = A, the default).
double gip(const CovarianceState& sigma_AB, int generator_mode = 0);

// Two-mode squeezed thermal probe; defaults are cosh(2r) = 5/2 and
// nA = nB = 1/2.
struct ProbeSpec {
    double r = 0.5 * std::acosh(2.5);
    double nA = 0.5;
    double nB = 0.5;
    int generator_mode = 0;

    CovarianceState state() const { return two_mode_squeezed_thermal(r, nA, nB); }
};

struct WitnessResult {
    Eigen::VectorXd times;
    Eigen::VectorXd Q;
    double n_gip = 0.0;
    std::uint64_t graph_seed = 0;
    int node = 0;
    double k = 0.0;
    double network_T = 0.0;
    double omega_S = 0.0;
};

// Q(t) = gip of the evolved probe block, evaluated on a uniform grid.
WitnessResult gip_trajectory(const CoupledSystem& cs, const ProbeSpec& probe, double network_T,
                             const Eigen::VectorXd& time_grid);

// Discrete positive variation: sum of positive increments of Q.
double n_gip(const Eigen::VectorXd& Q);

enum class GraphFamily { erdos_renyi, barabasi_albert, watts_strogatz };

struct FamilyPoint {
    GraphFamily family = GraphFamily::erdos_renyi;
    double param = 0.1;     // link probability (ER, WS) or links per node (BA)
    int ws_neighbors = 2;   // neighbor range for WS rings
    std::string label() const;
};

struct EnsembleConfig {
    int n_nodes = 30;
    double coupling = 0.05;
    double omega0 = 0.25;
    double k = 0.01;
    double network_T = 0.0;
    ProbeSpec probe;
    int eigenfrequency_index = 15;  // 1-based, ascending spectrum
    double t_final = 50.0;
    double dt = 0.1;
    int realizations = 100;
    std::uint64_t master_seed = 1;
    int threads = 0;  // 0 = hardware concurrency
};

struct RealizationResult {
    std::uint64_t seed = 0;
    int node = 0;
    double omega_S = 0.0;
    double value = 0.0;
    bool failed = false;
    std::string error;
};

struct EnsembleResult {
    FamilyPoint point;
    double k = 0.0;
    double network_T = 0.0;
    std::vector<RealizationResult> realizations;
    double mean = 0.0;
    double stderr_mean = 0.0;
    int count = 0;     // successful realizations
    int failures = 0;  // excluded ones
};

// Per realization: generate the graph, attach at a uniformly drawn node with
// omega_S pinned to the configured eigenfrequency, evolve on [0, t_final] and
// accumulate the witness. Failed realizations (unstable B, no connected
// sample) are excluded and counted. Aggregation runs in realization order
// with compensated summation, so results do not depend on the thread count.
EnsembleResult ensemble(const FamilyPoint& point, const EnsembleConfig& cfg);
std::vector<EnsembleResult> ensemble_sweep(const std::vector<FamilyPoint>& points,
                                           const EnsembleConfig& cfg);

}  // namespace oscnet

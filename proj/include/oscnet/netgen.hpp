#pragma once

#include <cstdint>
#include <optional>

#include "oscnet/graph.hpp"

namespace oscnet {

// Attempt cap for rejection resampling of connected graphs. Hitting it means
// the requested parameters make connectivity (or a legal rewiring) practically
// infeasible.
inline constexpr std::uint64_t kDefaultAttemptCap = 1000000;

// G(N, p): every one of the N(N-1)/2 links present independently with
// probability p, all with weight g. Resampled until connected.
WeightedGraph erdos_renyi(int n, double p, double g, std::uint64_t seed,
                          std::uint64_t attempt_cap = kDefaultAttemptCap);

// Preferential attachment started from a 3-node path; each new node attaches
// l distinct links, targets drawn sequentially with probability proportional
// to current degree. l=1 yields a tree with N-1 edges.
WeightedGraph barabasi_albert(int n, int l, double g, std::uint64_t seed);

// Ring with links to all <= nn-th nearest neighbors, each link rewired with
// probability p, keeping the lower-index endpoint; the new endpoint is drawn
// uniformly among non-duplicate, non-self targets. Edge count stays nn*N.
WeightedGraph watts_strogatz(int n, double p, int nn, double g, std::uint64_t seed,
                             std::uint64_t attempt_cap = kDefaultAttemptCap);

// Open chain with nearest (g1) and next-nearest (g2) neighbor couplings.
// The optional adjustments make every effective frequency equal to the bulk
// value when added to omega0^2 (zero in the bulk, positive at the ends).
struct ChainResult {
    WeightedGraph graph;
    Eigen::VectorXd omega_sq_adjust;
};
ChainResult chain_nnn(int n, double g1, double g2, bool homogenize);

// Moves one uniformly chosen existing link to a uniformly chosen absent pair
// with the same weight, resampling until the result is connected. Complete
// graphs have no legal move and are rejected.
WeightedGraph rewire_single_link(const WeightedGraph& g, std::uint64_t seed,
                                 std::uint64_t attempt_cap = kDefaultAttemptCap);

}  // namespace oscnet

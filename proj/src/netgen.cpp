#include "oscnet/netgen.hpp"

#include <stdexcept>
#include <vector>

#include "oscnet/rng.hpp"

namespace oscnet {

WeightedGraph erdos_renyi(int n, double p, double g, std::uint64_t seed,
                          std::uint64_t attempt_cap) {
    if (n < 2) throw std::invalid_argument("erdos_renyi: N >= 2 required");
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("erdos_renyi: 0 < p <= 1 required");
    if (g <= 0.0) throw std::invalid_argument("erdos_renyi: g > 0 required");
    Rng rng(seed);
    for (std::uint64_t attempt = 0; attempt < attempt_cap; ++attempt) {
        WeightedGraph graph(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.bernoulli(p)) graph.add_edge(i, j, g);
        if (is_connected(graph)) return graph;
    }
    throw std::runtime_error("erdos_renyi: no connected sample within attempt cap");
}

WeightedGraph barabasi_albert(int n, int l, double g, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("barabasi_albert: N >= 3 required");
    if (l < 1 || l > 3) throw std::invalid_argument("barabasi_albert: 1 <= l <= 3 required");
    if (g <= 0.0) throw std::invalid_argument("barabasi_albert: g > 0 required");
    Rng rng(seed);
    WeightedGraph graph(n);
    // 3-node path seed keeps the l=1 network a tree with N-1 edges
    graph.add_edge(0, 1, g);
    graph.add_edge(1, 2, g);
    std::vector<long> degree(n, 0);
    degree[0] = 1;
    degree[1] = 2;
    degree[2] = 1;
    for (int v = 3; v < n; ++v) {
        std::vector<char> taken(v, 0);
        long total = 0;
        for (int u = 0; u < v; ++u) total += degree[u];
        for (int link = 0; link < l; ++link) {
            // degree-proportional draw among not-yet-chosen targets
            const double r = rng.uniform() * static_cast<double>(total);
            double acc = 0.0;
            int chosen = -1;
            for (int u = 0; u < v; ++u) {
                if (taken[u]) continue;
                acc += static_cast<double>(degree[u]);
                if (r < acc) {
                    chosen = u;
                    break;
                }
            }
            if (chosen < 0) {  // numeric edge case: r == total
                for (int u = v - 1; u >= 0; --u)
                    if (!taken[u]) {
                        chosen = u;
                        break;
                    }
            }
            taken[chosen] = 1;
            total -= degree[chosen];
            graph.add_edge(chosen, v, g);
            ++degree[chosen];
        }
        degree[v] = l;
    }
    return graph;
}

WeightedGraph watts_strogatz(int n, double p, int nn, double g, std::uint64_t seed,
                             std::uint64_t attempt_cap) {
    if (nn < 1) throw std::invalid_argument("watts_strogatz: n >= 1 required");
    if (n < 2 * nn + 1) throw std::invalid_argument("watts_strogatz: N >= 2n+1 required");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("watts_strogatz: 0 <= p <= 1 required");
    if (g <= 0.0) throw std::invalid_argument("watts_strogatz: g > 0 required");
    Rng rng(seed);
    for (std::uint64_t attempt = 0; attempt < attempt_cap; ++attempt) {
        WeightedGraph graph(n);
        for (int d = 1; d <= nn; ++d)
            for (int i = 0; i < n; ++i)
                graph.add_edge(i, (i + d) % n, g);
        // rewire in a fixed order: ring distance first, then node index
        for (int d = 1; d <= nn; ++d) {
            for (int i = 0; i < n; ++i) {
                const int a = std::min(i, (i + d) % n);
                const int b = std::max(i, (i + d) % n);
                if (!graph.has_edge(a, b)) continue;  // already moved by an earlier rewire
                if (!rng.bernoulli(p)) continue;
                // keep the lower-index endpoint, move the other end
                std::vector<int> candidates;
                candidates.reserve(n);
                for (int t = 0; t < n; ++t)
                    if (t != a && !graph.has_edge(a, t)) candidates.push_back(t);
                if (candidates.empty()) continue;  // node saturated, leave link in place
                const int t = candidates[rng.uniform_below(candidates.size())];
                graph.remove_edge(a, b);
                graph.add_edge(a, t, g);
            }
        }
        if (is_connected(graph)) return graph;
    }
    throw std::runtime_error("watts_strogatz: no connected sample within attempt cap");
}

ChainResult chain_nnn(int n, double g1, double g2, bool homogenize) {
    if (n < 3) throw std::invalid_argument("chain_nnn: N >= 3 required");
    WeightedGraph graph(n);
    for (int i = 0; i + 1 < n; ++i)
        if (g1 != 0.0) graph.add_edge(i, i + 1, g1);
    for (int i = 0; i + 2 < n; ++i)
        if (g2 != 0.0) graph.add_edge(i, i + 2, g2);
    Eigen::VectorXd adjust = Eigen::VectorXd::Zero(n);
    if (homogenize) {
        // bulk effective frequency absorbs 2*g1 + 2*g2 of coupling
        const double bulk = 2.0 * g1 + 2.0 * g2;
        const Eigen::VectorXd rowsum = graph.weights.rowwise().sum();
        for (int i = 0; i < n; ++i) adjust(i) = bulk - rowsum(i);
    }
    return {std::move(graph), std::move(adjust)};
}

WeightedGraph rewire_single_link(const WeightedGraph& g, std::uint64_t seed,
                                 std::uint64_t attempt_cap) {
    const auto edge_list = g.edges();
    if (edge_list.empty()) throw std::invalid_argument("rewire_single_link: graph has no edges");
    std::vector<std::pair<int, int>> absent;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (!g.has_edge(i, j)) absent.emplace_back(i, j);
    if (absent.empty())
        throw std::runtime_error("rewire_single_link: saturated graph, no absent pair");
    Rng rng(seed);
    for (std::uint64_t attempt = 0; attempt < attempt_cap; ++attempt) {
        const auto [a, b] = edge_list[rng.uniform_below(edge_list.size())];
        const auto [c, d] = absent[rng.uniform_below(absent.size())];
        WeightedGraph out = g;
        const double w = out.weights(a, b);
        out.remove_edge(a, b);
        out.add_edge(c, d, w);
        if (is_connected(out)) return out;
    }
    throw std::runtime_error("rewire_single_link: no connected rewiring within attempt cap");
}

}  // namespace oscnet

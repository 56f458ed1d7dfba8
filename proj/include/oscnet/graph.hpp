#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace oscnet {

// Weighted undirected graph of oscillator couplings. The weight matrix is
// kept exactly symmetric with zero diagonal; weights are coupling strengths
// g_ij >= 0 and a zero weight means no link.
struct WeightedGraph {
    int n = 0;
    Eigen::MatrixXd weights;

    WeightedGraph() = default;
    explicit WeightedGraph(int n_) : n(n_), weights(Eigen::MatrixXd::Zero(n_, n_)) {}

    void add_edge(int i, int j, double w);
    void remove_edge(int i, int j);
    bool has_edge(int i, int j) const { return weights(i, j) != 0.0; }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
    Eigen::VectorXi degrees() const;
};

// Breadth-first reachability on nonzero weights.
bool is_connected(const WeightedGraph& g);

// Graph file format: {"n": int, "edges": [[i, j, w], ...], "bare_frequencies":
// [...]} with 0-based indices and i < j. The reader rejects malformed index
// order and duplicate pairs.
void save_graph_json(const WeightedGraph& g, const Eigen::VectorXd& bare_frequencies,
                     const std::string& path);
std::pair<WeightedGraph, Eigen::VectorXd> load_graph_json(const std::string& path);

}  // namespace oscnet

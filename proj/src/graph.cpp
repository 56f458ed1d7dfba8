#include "oscnet/graph.hpp"

#include <fstream>
#include <set>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace oscnet {

void WeightedGraph::add_edge(int i, int j, double w) {
    if (i == j) throw std::invalid_argument("self-loop");
    weights(i, j) = w;
    weights(j, i) = w;
}

void WeightedGraph::remove_edge(int i, int j) {
    weights(i, j) = 0.0;
    weights(j, i) = 0.0;
}

int WeightedGraph::edge_count() const {
    int c = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (weights(i, j) != 0.0) ++c;
    return c;
}

std::vector<std::pair<int, int>> WeightedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (weights(i, j) != 0.0) out.emplace_back(i, j);
    return out;
}

Eigen::VectorXi WeightedGraph::degrees() const {
    Eigen::VectorXi d = Eigen::VectorXi::Zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i && weights(i, j) != 0.0) ++d(i);
    return d;
}

bool is_connected(const WeightedGraph& g) {
    if (g.n == 0) return false;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < g.n; ++v) {
            if (!seen[v] && g.weights(u, v) != 0.0) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == g.n;
}

void save_graph_json(const WeightedGraph& g, const Eigen::VectorXd& bare_frequencies,
                     const std::string& path) {
    nlohmann::json j;
    j["n"] = g.n;
    auto edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges())
        edges.push_back({a, b, g.weights(a, b)});
    j["edges"] = edges;
    auto freqs = nlohmann::json::array();
    for (int i = 0; i < bare_frequencies.size(); ++i) freqs.push_back(bare_frequencies(i));
    j["bare_frequencies"] = freqs;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::pair<WeightedGraph, Eigen::VectorXd> load_graph_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    nlohmann::json j;
    in >> j;
    const int n = j.at("n").get<int>();
    if (n < 2) throw std::runtime_error("graph file: n must be >= 2");
    WeightedGraph g(n);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : j.at("edges")) {
        const int a = e.at(0).get<int>();
        const int b = e.at(1).get<int>();
        const double w = e.at(2).get<double>();
        if (a < 0 || b >= n || a >= b)
            throw std::runtime_error("graph file: edge indices must satisfy 0 <= i < j < n");
        if (!seen.insert({a, b}).second)
            throw std::runtime_error("graph file: duplicate edge");
        if (w < 0.0) throw std::runtime_error("graph file: negative weight");
        g.add_edge(a, b, w);
    }
    Eigen::VectorXd freqs(n);
    const auto& f = j.at("bare_frequencies");
    if (static_cast<int>(f.size()) != n)
        throw std::runtime_error("graph file: bare_frequencies length mismatch");
    for (int i = 0; i < n; ++i) freqs(i) = f.at(i).get<double>();
    return {g, freqs};
}

}  // namespace oscnet

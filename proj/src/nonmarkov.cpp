#include "oscnet/nonmarkov.hpp"

#include <cmath>
#include <stdexcept>

#include "oscnet/netgen.hpp"
#include "oscnet/parallel.hpp"
#include "oscnet/rng.hpp"

namespace oscnet {

// GIP closed form. With V = 2 sigma (vacuum = I) in mode-blocked form
// [[alpha, gamma], [gamma^T, beta]], the local symplectic invariants are
// A = det alpha, B = det beta, C = det gamma, D = det V, and
//
//   GIP = (num12 + sqrt(prod)) / (2 (D - 1) (A + B + 2C + D + 1)),
//
// the admissible root of the generalized eigenvalue problem that minimizes
// the quantum Fisher information over unit-determinant local phase
// generators. Mixed states only: D -> 1 (pure states) degenerates the
// denominator.
static double gip_from_invariants(double A, double B, double C, double D) {
    const double num12 = A * B + A * C - A * D + A + B * C + C * C - C * D + C - D * D;
    const double A2 = A * A, A3 = A2 * A, B2 = B * B, C2 = C * C, C3 = C2 * C, C4 = C2 * C2,
                 D2 = D * D, D3 = D2 * D;
    const double prod =
        A3 * B * D - A3 * B + A2 * B2 * D + 4 * A2 * B * C * D - 2 * A2 * B * C +
        2 * A2 * B * D2 - 3 * A2 * B * D + A2 * B + A2 * C2 - A2 * D + A2 +
        2 * A * B2 * C * D + A * B2 * D2 - A * B2 * D + 5 * A * B * C2 * D - A * B * C2 +
        4 * A * B * C * D2 - 4 * A * B * C * D + A * B * D3 - 3 * A * B * D2 + 2 * A * C3 +
        A * C2 * D - A * C2 - 2 * A * C * D - A * D2 + A * D + B2 * C2 * D + 2 * B * C3 * D +
        B * C2 * D2 - B * C2 * D - 2 * B * C * D2 - B * D3 + B * D2 + C4 - 2 * C2 * D + D2;
    const double den = (D - 1.0) * (A + B + 2.0 * C + D + 1.0);
    if (std::abs(den) < 1e-12)
        throw std::runtime_error("gip: state too close to pure (invariant denominator ~ 0)");
    const double value = (num12 + std::sqrt(std::max(prod, 0.0))) / (2.0 * den);
    return std::max(value, 0.0);
}

double gip(const CovarianceState& sigma_AB, int generator_mode) {
    if (sigma_AB.modes() != 2) throw std::invalid_argument("gip: two-mode state required");
    if (generator_mode != 0 && generator_mode != 1)
        throw std::invalid_argument("gip: generator_mode must be 0 (A) or 1 (B)");
    // (qA,qB,pA,pB) -> mode-blocked V = 2 sigma with the generator mode first
    const auto& s = sigma_AB.sigma;
    const int qa = generator_mode == 0 ? 0 : 1;
    const int qb = 1 - qa;
    const int pa = 2 + qa, pb = 2 + qb;
    Eigen::Matrix4d V;
    const int idx[4] = {qa, pa, qb, pb};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) V(i, j) = 2.0 * s(idx[i], idx[j]);
    const double A = V.block<2, 2>(0, 0).determinant();
    const double B = V.block<2, 2>(2, 2).determinant();
    const double C = V.block<2, 2>(0, 2).determinant();
    const double D = V.determinant();
    return gip_from_invariants(A, B, C, D);
}

WitnessResult gip_trajectory(const CoupledSystem& cs, const ProbeSpec& probe, double network_T,
                             const Eigen::VectorXd& time_grid) {
    const CovarianceState network_state = thermal_eigenbasis(cs.network, network_T);
    const CovarianceState joint0 = joint_initial(cs, network_state, probe.state());
    const Eigen::Vector2d freqs(cs.omega_S, cs.omega_S);
    WitnessResult out;
    out.times = time_grid;
    out.Q.resize(time_grid.size());
    for (int i = 0; i < time_grid.size(); ++i) {
        const CovarianceState joint = evolve_joint(cs, joint0, time_grid(i));
        const CovarianceState block = to_dimensionless(probe_block(joint), freqs);
        out.Q(i) = gip(block, probe.generator_mode);
    }
    out.n_gip = n_gip(out.Q);
    out.node = cs.node;
    out.k = cs.k;
    out.network_T = network_T;
    out.omega_S = cs.omega_S;
    return out;
}

double n_gip(const Eigen::VectorXd& Q) {
    if (Q.size() < 2) throw std::invalid_argument("n_gip: need at least two samples");
    double acc = 0.0, comp = 0.0;
    for (int i = 1; i < Q.size(); ++i) {
        const double d = Q(i) - Q(i - 1);
        if (d > 0.0) {
            // Neumaier compensation keeps the sum reproducible at 1e-12
            const double t = acc + d;
            comp += std::abs(acc) >= std::abs(d) ? (acc - t) + d : (d - t) + acc;
            acc = t;
        }
    }
    return acc + comp;
}

std::string FamilyPoint::label() const {
    switch (family) {
        case GraphFamily::erdos_renyi: return "erdos_renyi";
        case GraphFamily::barabasi_albert: return "barabasi_albert";
        case GraphFamily::watts_strogatz: return "watts_strogatz";
    }
    return "?";
}

static WeightedGraph make_graph(const FamilyPoint& point, int n, double g, std::uint64_t seed) {
    switch (point.family) {
        case GraphFamily::erdos_renyi:
            return erdos_renyi(n, point.param, g, seed);
        case GraphFamily::barabasi_albert:
            return barabasi_albert(n, static_cast<int>(std::lround(point.param)), g, seed);
        case GraphFamily::watts_strogatz:
            return watts_strogatz(n, point.param, point.ws_neighbors, g, seed);
    }
    throw std::invalid_argument("ensemble: unknown graph family");
}

EnsembleResult ensemble(const FamilyPoint& point, const EnsembleConfig& cfg) {
    if (cfg.realizations < 1) throw std::invalid_argument("ensemble: realizations >= 1");
    if (cfg.eigenfrequency_index < 1 || cfg.eigenfrequency_index > cfg.n_nodes)
        throw std::invalid_argument("ensemble: eigenfrequency index out of range");
    const int steps = static_cast<int>(std::lround(cfg.t_final / cfg.dt));
    Eigen::VectorXd grid(steps + 1);
    for (int i = 0; i <= steps; ++i) grid(i) = i * cfg.dt;

    EnsembleResult res;
    res.point = point;
    res.k = cfg.k;
    res.network_T = cfg.network_T;
    res.realizations.resize(cfg.realizations);

    parallel_for(
        cfg.realizations,
        [&](std::size_t i) {
            RealizationResult& r = res.realizations[i];
            r.seed = derive_seed(cfg.master_seed, i);
            try {
                const WeightedGraph graph = make_graph(point, cfg.n_nodes, cfg.coupling, r.seed);
                const OscillatorNetwork net = uniform_network(cfg.omega0, graph);
                const EigenSystem eig = diagonalize(assemble_A(net));
                // node draw comes after graph generation from an independent stream
                Rng rng(derive_seed(r.seed, 0x6f73636eULL));
                r.node = static_cast<int>(rng.uniform_below(cfg.n_nodes));
                r.omega_S = eig.Omega(cfg.eigenfrequency_index - 1);
                const CoupledSystem cs = attach(eig, r.omega_S, cfg.k, r.node);
                const WitnessResult w = gip_trajectory(cs, cfg.probe, cfg.network_T, grid);
                r.value = w.n_gip;
            } catch (const std::exception& e) {
                r.failed = true;
                r.error = e.what();
            }
        },
        cfg.threads);

    // order-fixed compensated aggregation
    double acc = 0.0, comp = 0.0;
    int count = 0;
    for (const auto& r : res.realizations) {
        if (r.failed) continue;
        const double t = acc + r.value;
        comp += std::abs(acc) >= std::abs(r.value) ? (acc - t) + r.value : (r.value - t) + acc;
        acc = t;
        ++count;
    }
    res.count = count;
    res.failures = cfg.realizations - count;
    if (count > 0) res.mean = (acc + comp) / count;
    if (count > 1) {
        double var = 0.0, vc = 0.0;
        for (const auto& r : res.realizations) {
            if (r.failed) continue;
            const double d = (r.value - res.mean) * (r.value - res.mean);
            const double t = var + d;
            vc += std::abs(var) >= std::abs(d) ? (var - t) + d : (d - t) + var;
            var = t;
        }
        res.stderr_mean = std::sqrt((var + vc) / (count - 1) / count);
    }
    return res;
}

std::vector<EnsembleResult> ensemble_sweep(const std::vector<FamilyPoint>& points,
                                           const EnsembleConfig& cfg) {
    std::vector<EnsembleResult> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(ensemble(p, cfg));
    return out;
}

}  // namespace oscnet

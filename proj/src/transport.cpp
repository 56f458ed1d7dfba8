#include "oscnet/transport.hpp"

#include <stdexcept>

namespace oscnet {

CovarianceState make_local_excitation(const OscillatorNetwork& net, const EigenSystem& eig,
                                      int site) {
    const int n = net.n;
    if (site < 0 || site >= n) throw std::invalid_argument("make_local_excitation: bad site");
    const CovarianceState vac = thermal_eigenbasis(eig, 0.0);
    // rotate the stationary state into the network basis
    Eigen::MatrixXd KK = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    KK.topLeftCorner(n, n) = eig.K;
    KK.bottomRightCorner(n, n) = eig.K;
    CovarianceState out;
    out.sigma = KK * vac.sigma * KK.transpose();
    out.basis = Basis::network;
    const Eigen::VectorXd eff = net.effective_frequencies();
    out.mode_frequencies = eff;
    out.sigma(site, site) = 1.5 / eff(site);
    out.sigma(n + site, n + site) = 1.5 * eff(site);
    return out;
}

TransportRecord excitation_trajectory(const OscillatorNetwork& net, const EigenSystem& eig,
                                      const CovarianceState& initial,
                                      const Eigen::VectorXd& time_grid) {
    const int n = net.n;
    if (initial.basis != Basis::network || initial.modes() != n)
        throw std::invalid_argument("excitation_trajectory: network-basis state required");
    const Eigen::VectorXd eff = net.effective_frequencies();
    TransportRecord rec;
    rec.times = time_grid;
    rec.excitations.resize(time_grid.size(), n);
    rec.reference.resize(n);
    for (int j = 0; j < n; ++j) rec.reference(j) = excitation_number(initial, j, eff(j));
    for (int k = 0; k < time_grid.size(); ++k) {
        const CovarianceState st = evolve(initial, propagator_network(eig, time_grid(k)));
        for (int j = 0; j < n; ++j) rec.excitations(k, j) = excitation_number(st, j, eff(j));
    }
    return rec;
}

double participation_ratio(const TransportRecord& rec, int step) {
    const Eigen::VectorXd d = rec.excess(step).cwiseMax(0.0);
    const double s = d.sum();
    const double s2 = d.squaredNorm();
    if (s <= 0.0 || s2 <= 0.0)
        throw std::runtime_error("participation_ratio: no positive excitation spread");
    return s * s / s2;
}

int front_position(const TransportRecord& rec, int step, double frac) {
    const Eigen::VectorXd d = rec.excess(step);
    const double dmax = d.maxCoeff();
    if (dmax <= 0.0) return 0;
    int pos = 0;
    for (int j = 0; j < d.size(); ++j)
        if (d(j) >= frac * dmax) pos = j;
    return pos;
}

double transport_distance(const TransportRecord& a, const TransportRecord& b) {
    if (a.excitations.rows() != b.excitations.rows() ||
        a.excitations.cols() != b.excitations.cols())
        throw std::invalid_argument("transport_distance: shape mismatch");
    const Eigen::MatrixXd da = a.excitations.rowwise() - a.reference.transpose();
    const Eigen::MatrixXd db = b.excitations.rowwise() - b.reference.transpose();
    const double na = da.norm();
    if (na == 0.0) throw std::runtime_error("transport_distance: empty reference map");
    return (da - db).norm() / na;
}

}  // namespace oscnet

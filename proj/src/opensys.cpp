#include "oscnet/opensys.hpp"

#include <cmath>
#include <stdexcept>

namespace oscnet {

CoupledSystem attach(const EigenSystem& eig, double omega_S, double k, int node) {
    const int n = eig.n();
    if (omega_S <= 0.0) throw std::invalid_argument("attach: omega_S > 0 required");
    if (k < 0.0) throw std::invalid_argument("attach: k >= 0 required");
    if (node < 0 || node >= n) throw std::invalid_argument("attach: node index out of range");
    CoupledSystem cs;
    cs.network = eig;
    cs.omega_S = omega_S;
    cs.k = k;
    cs.node = node;
    cs.B = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int i = 0; i < n; ++i) cs.B(i, i) = 0.5 * eig.Omega(i) * eig.Omega(i);
    cs.B(n, n) = 0.5 * omega_S * omega_S;
    for (int i = 0; i < n; ++i) {
        cs.B(n, i) = -0.5 * k * eig.K(node, i);
        cs.B(i, n) = cs.B(n, i);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cs.B);
    if (solver.info() != Eigen::Success) throw std::runtime_error("attach: eigensolver failed");
    if (solver.eigenvalues()(0) <= 0.0)
        throw std::runtime_error("attach: total Hamiltonian not positive definite (k too large)");
    cs.O = solver.eigenvectors();
    for (int j = 0; j <= n; ++j) {
        int imax = 0;
        cs.O.col(j).cwiseAbs().maxCoeff(&imax);
        if (cs.O(imax, j) < 0.0) cs.O.col(j) = -cs.O.col(j);
    }
    cs.f = (2.0 * solver.eigenvalues().array()).sqrt();
    return cs;
}

SymplecticPropagator total_propagator(const CoupledSystem& cs, double t, PropagatorBasis basis) {
    const int m = cs.n_network() + 1;
    const Eigen::ArrayXd c = (cs.f.array() * t).cos();
    const Eigen::ArrayXd s = (cs.f.array() * t).sin();
    Eigen::MatrixXd Oc = cs.O * c.matrix().asDiagonal() * cs.O.transpose();
    Eigen::MatrixXd Os_inv = cs.O * (s / cs.f.array()).matrix().asDiagonal() * cs.O.transpose();
    Eigen::MatrixXd Os_f = cs.O * (s * cs.f.array()).matrix().asDiagonal() * cs.O.transpose();
    if (basis == PropagatorBasis::eigen_to_network) {
        // embedded K: acts on the network part, leaves the system row alone
        Eigen::MatrixXd Kt = Eigen::MatrixXd::Zero(m, m);
        Kt.topLeftCorner(m - 1, m - 1) = cs.network.K;
        Kt(m - 1, m - 1) = 1.0;
        Oc = Kt * Oc;
        Os_inv = Kt * Os_inv;
        Os_f = Kt * Os_f;
    } else if (basis == PropagatorBasis::network_to_network) {
        throw std::invalid_argument("total_propagator: source basis is always eigenmode");
    }
    Eigen::MatrixXd S(2 * m, 2 * m);
    S.topLeftCorner(m, m) = Oc;
    S.topRightCorner(m, m) = Os_inv;
    S.bottomLeftCorner(m, m) = -Os_f;
    S.bottomRightCorner(m, m) = Oc;
    return {std::move(S), t, basis};
}

CovarianceState joint_initial(const CoupledSystem& cs, const CovarianceState& network_state,
                              const CovarianceState& probe_AB) {
    const int n = cs.n_network();
    if (network_state.basis != Basis::eigenmode)
        throw std::invalid_argument("joint_initial: network state must be eigenmode basis");
    if (network_state.modes() != n)
        throw std::invalid_argument("joint_initial: network state dimension mismatch");
    if (probe_AB.modes() != 2 || probe_AB.basis != Basis::dimensionless)
        throw std::invalid_argument("joint_initial: probe must be a dimensionless 2-mode state");
    // probe converted to dimensionful units at (omega_S, omega_B = omega_S)
    Eigen::Vector2d wv(cs.omega_S, cs.omega_S);
    const CovarianceState probe = from_dimensionless(probe_AB, wv, Basis::eigenmode);
    const int m = n + 2;
    CovarianceState out;
    out.sigma = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    out.sigma.block(0, 0, n, n) = network_state.sigma.topLeftCorner(n, n);
    out.sigma.block(0, m, n, n) = network_state.sigma.topRightCorner(n, n);
    out.sigma.block(m, 0, n, n) = network_state.sigma.bottomLeftCorner(n, n);
    out.sigma.block(m, m, n, n) = network_state.sigma.bottomRightCorner(n, n);
    const int idx[4] = {n, n + 1, m + n, m + n + 1};  // qS, qB, pS, pB
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            out.sigma(idx[a], idx[b]) = probe.sigma(a, b);
    out.basis = Basis::eigenmode;
    Eigen::VectorXd freqs(m);
    freqs.head(n) = cs.network.Omega;
    freqs(n) = cs.omega_S;
    freqs(n + 1) = cs.omega_S;
    out.mode_frequencies = freqs;
    return out;
}

CovarianceState evolve_joint(const CoupledSystem& cs, const CovarianceState& joint, double t) {
    const int n = cs.n_network();
    const int m = n + 2;
    if (joint.modes() != m) throw std::invalid_argument("evolve_joint: dimension mismatch");
    const SymplecticPropagator prop = total_propagator(cs, t);
    // extend to the ancilla: identity on (q_B, p_B)
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    const int nc = n + 1;
    S.block(0, 0, nc, nc) = prop.S.topLeftCorner(nc, nc);
    S.block(0, m, nc, nc) = prop.S.topRightCorner(nc, nc);
    S.block(m, 0, nc, nc) = prop.S.bottomLeftCorner(nc, nc);
    S.block(m, m, nc, nc) = prop.S.bottomRightCorner(nc, nc);
    S(n + 1, n + 1) = 1.0;
    S(m + n + 1, m + n + 1) = 1.0;
    CovarianceState out;
    out.sigma = S * joint.sigma * S.transpose();
    out.basis = joint.basis;
    out.mode_frequencies = joint.mode_frequencies;
    return out;
}

CovarianceState probe_block(const CovarianceState& joint) {
    const int m = joint.modes();
    const int n = m - 2;
    const int idx[4] = {n, n + 1, m + n, m + n + 1};
    CovarianceState out;
    out.sigma = Eigen::MatrixXd::Zero(4, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            out.sigma(a, b) = joint.sigma(idx[a], idx[b]);
    out.basis = joint.basis;
    if (joint.mode_frequencies.size() == m) {
        out.mode_frequencies = Eigen::Vector2d(joint.mode_frequencies(n),
                                               joint.mode_frequencies(n + 1));
    }
    return out;
}

GaussianChannel channel(const CoupledSystem& cs, const CovarianceState& network_state, double t) {
    const int n = cs.n_network();
    if (network_state.basis != Basis::eigenmode || network_state.modes() != n)
        throw std::invalid_argument("channel: eigenmode-basis network state required");
    // the rank-one noise sum assumes no initial eigenmode correlations
    Eigen::MatrixXd off = network_state.sigma;
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("channel: network state must be diagonal (thermal)");
    const int m = n + 1;
    const Eigen::ArrayXd c = (cs.f.array() * t).cos();
    const Eigen::ArrayXd s = (cs.f.array() * t).sin();
    // only the system row of each block is needed
    const Eigen::VectorXd rowO = cs.O.row(n).transpose();
    const Eigen::VectorXd rc = cs.O * (c * rowO.array()).matrix();
    const Eigen::VectorXd rs_inv = cs.O * ((s / cs.f.array()) * rowO.array()).matrix();
    const Eigen::VectorXd rs_f = cs.O * ((s * cs.f.array()) * rowO.array()).matrix();
    GaussianChannel ch;
    ch.t = t;
    ch.C << rc(n), rs_inv(n), -rs_f(n), rc(n);
    ch.L.setZero();
    for (int j = 0; j < n; ++j) {
        const Eigen::Vector2d vq(rc(j), -rs_f(j));
        const Eigen::Vector2d vp(rs_inv(j), rc(j));
        ch.L += network_state.sigma(j, j) * vq * vq.transpose();
        ch.L += network_state.sigma(n + j, n + j) * vp * vp.transpose();
    }
    return ch;
}

double total_energy_coupled(const CoupledSystem& cs, const CovarianceState& joint) {
    const int n = cs.n_network();
    const int m = n + 2;
    if (joint.modes() != m)
        throw std::invalid_argument("total_energy_coupled: dimension mismatch");
    const int nc = n + 1;
    const Eigen::MatrixXd qq = joint.sigma.block(0, 0, nc, nc);
    const Eigen::MatrixXd pp = joint.sigma.block(m, m, nc, nc);
    return (cs.B * qq).trace() + 0.5 * pp.trace();
}

}  // namespace oscnet

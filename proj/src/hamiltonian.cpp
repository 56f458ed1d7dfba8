#include "oscnet/hamiltonian.hpp"

#include <stdexcept>

namespace oscnet {

OscillatorNetwork::OscillatorNetwork(Eigen::VectorXd omega_, WeightedGraph graph_)
    : n(static_cast<int>(omega_.size())), omega(std::move(omega_)), graph(std::move(graph_)) {
    if (graph.n != n) throw std::invalid_argument("network: frequency/graph size mismatch");
    for (int i = 0; i < n; ++i)
        if (omega(i) <= 0.0) throw std::invalid_argument("network: omega_i > 0 required");
}

Eigen::VectorXd OscillatorNetwork::effective_frequencies() const {
    const Eigen::VectorXd rowsum = graph.weights.rowwise().sum();
    return (omega.array().square() + rowsum.array()).sqrt();
}

OscillatorNetwork uniform_network(double omega0, WeightedGraph graph) {
    const int n = graph.n;
    return OscillatorNetwork(Eigen::VectorXd::Constant(n, omega0), std::move(graph));
}

Eigen::MatrixXd assemble_A(const OscillatorNetwork& net) {
    const int n = net.n;
    const Eigen::VectorXd rowsum = net.graph.weights.rowwise().sum();
    Eigen::MatrixXd A = -0.5 * net.graph.weights;
    for (int i = 0; i < n; ++i)
        A(i, i) = 0.5 * (net.omega(i) * net.omega(i) + rowsum(i));
    return A;
}

Eigen::MatrixXd assemble_A_laplacian(const OscillatorNetwork& net) {
    const int n = net.n;
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
    D.diagonal() = net.graph.weights.rowwise().sum();
    const Eigen::MatrixXd L = D - net.graph.weights;
    Eigen::MatrixXd A = 0.5 * L;
    A.diagonal() += 0.5 * net.omega.array().square().matrix();
    return A;
}

EigenSystem diagonalize(const Eigen::MatrixXd& A) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("diagonalize: eigensolver failed");
    Eigen::VectorXd evals = solver.eigenvalues();  // ascending
    if (evals(0) <= 0.0)
        throw std::runtime_error("diagonalize: A not positive definite (unphysical network)");
    Eigen::MatrixXd K = solver.eigenvectors();
    // deterministic sign: largest-magnitude component of each column positive
    for (int j = 0; j < K.cols(); ++j) {
        int imax = 0;
        K.col(j).cwiseAbs().maxCoeff(&imax);
        if (K(imax, j) < 0.0) K.col(j) = -K.col(j);
    }
    EigenSystem eig;
    eig.K = std::move(K);
    eig.Omega = (2.0 * evals.array()).sqrt();
    return eig;
}

SymplecticPropagator propagator_eigenmode(const EigenSystem& eig, double t) {
    const int n = eig.n();
    const Eigen::ArrayXd c = (eig.Omega.array() * t).cos();
    const Eigen::ArrayXd s = (eig.Omega.array() * t).sin();
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        S(i, i) = c(i);
        S(i, n + i) = s(i) / eig.Omega(i);
        S(n + i, i) = -eig.Omega(i) * s(i);
        S(n + i, n + i) = c(i);
    }
    return {std::move(S), t, PropagatorBasis::eigen_to_eigen};
}

SymplecticPropagator propagator_network(const EigenSystem& eig, double t) {
    const int n = eig.n();
    const Eigen::ArrayXd c = (eig.Omega.array() * t).cos();
    const Eigen::ArrayXd s = (eig.Omega.array() * t).sin();
    const Eigen::MatrixXd Kc = eig.K * c.matrix().asDiagonal() * eig.K.transpose();
    const Eigen::MatrixXd Ks_inv =
        eig.K * (s / eig.Omega.array()).matrix().asDiagonal() * eig.K.transpose();
    const Eigen::MatrixXd Ks_f =
        eig.K * (s * eig.Omega.array()).matrix().asDiagonal() * eig.K.transpose();
    Eigen::MatrixXd S(2 * n, 2 * n);
    S.topLeftCorner(n, n) = Kc;
    S.topRightCorner(n, n) = Ks_inv;
    S.bottomLeftCorner(n, n) = -Ks_f;
    S.bottomRightCorner(n, n) = Kc;
    return {std::move(S), t, PropagatorBasis::network_to_network};
}

double total_energy(const OscillatorNetwork& net, const Eigen::MatrixXd& cov) {
    const int n = net.n;
    if (cov.rows() != 2 * n || cov.cols() != 2 * n)
        throw std::invalid_argument("total_energy: covariance dimension mismatch");
    const Eigen::MatrixXd A = assemble_A(net);
    return (A * cov.topLeftCorner(n, n)).trace() + 0.5 * cov.bottomRightCorner(n, n).trace();
}

double symplecticity_residual(const Eigen::MatrixXd& S) {
    const int n = static_cast<int>(S.rows()) / 2;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    J.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    J.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    return (S * J * S.transpose() - J).cwiseAbs().maxCoeff();
}

}  // namespace oscnet

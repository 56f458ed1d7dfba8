#include "oscnet/spectral.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oscnet {

double damping_kernel(const ModeCouplings& mc, double t) {
    double acc = 0.0;
    for (int i = 0; i < mc.Omega.size(); ++i) {
        const double w = mc.Omega(i);
        acc += mc.g(i) * mc.g(i) / (w * w) * std::cos(w * t);
    }
    return acc;
}

// int_0^T cos(a t) cos(w t) dt = sin((a-w)T)/(2(a-w)) + sin((a+w)T)/(2(a+w))
static double cos_product_integral(double a, double w, double T) {
    const double dm = a - w;
    const double dp = a + w;
    const double t1 = std::abs(dm) < 1e-12 ? 0.5 * T : std::sin(dm * T) / (2.0 * dm);
    const double t2 = std::abs(dp) < 1e-12 ? 0.5 * T : std::sin(dp * T) / (2.0 * dp);
    return t1 + t2;
}

double windowed_spectral_density_at(const ModeCouplings& mc, double t_max, double omega) {
    if (t_max <= 0.0) throw std::invalid_argument("windowed_spectral_density: t_max > 0");
    double acc = 0.0;
    for (int i = 0; i < mc.Omega.size(); ++i) {
        const double w = mc.Omega(i);
        acc += mc.g(i) * mc.g(i) / (w * w) * cos_product_integral(w, omega, t_max);
    }
    return omega * acc;
}

SampledSpectralDensity windowed_spectral_density(const ModeCouplings& mc, double t_max,
                                                 const Eigen::VectorXd& omega_grid) {
    SampledSpectralDensity out;
    out.omega = omega_grid;
    out.J.resize(omega_grid.size());
    for (int i = 0; i < omega_grid.size(); ++i)
        out.J(i) = windowed_spectral_density_at(mc, t_max, omega_grid(i));
    return out;
}

double default_t_max(const ModeCouplings& mc, double cap, double threshold, double dt,
                     double window) {
    const double g0 = damping_kernel(mc, 0.0);
    if (g0 <= 0.0) return cap;
    const int wn = std::max(1, static_cast<int>(std::lround(window / dt)));
    // sliding-window maximum of |gamma|/gamma(0)
    std::deque<std::pair<int, double>> maxq;
    std::vector<double> ratio;
    const int steps = static_cast<int>(std::ceil((cap + window) / dt));
    bool entered_transient = false;
    for (int i = 0; i <= steps; ++i) {
        const double r = std::abs(damping_kernel(mc, i * dt)) / g0;
        while (!maxq.empty() && maxq.back().second <= r) maxq.pop_back();
        maxq.emplace_back(i, r);
        if (i < wn - 1) continue;
        const int lead = i - wn + 1;  // envelope value at t = lead*dt
        while (maxq.front().first < lead) maxq.pop_front();
        const double env = maxq.front().second;
        const double t_env = lead * dt;
        if (t_env > cap) break;
        if (!entered_transient) {
            if (env < threshold) entered_transient = true;
        } else if (env >= threshold) {
            return t_env;
        }
    }
    return cap;
}

double probe_J(double n_at_0, double n_at_t, double omega_S, double T_network, double t) {
    if (t <= 0.0) throw std::invalid_argument("probe_J: t > 0 required");
    if (omega_S <= 0.0) throw std::invalid_argument("probe_J: omega_S > 0 required");
    double n_eq = 0.0;
    if (T_network > 0.0) n_eq = 1.0 / std::expm1(omega_S / T_network);
    const double dn0 = n_eq - n_at_0;
    const double dnt = n_eq - n_at_t;
    if (dn0 == 0.0 || dnt == 0.0 || (dn0 > 0.0) != (dnt > 0.0))
        throw std::runtime_error("probe_J: occupation difference vanished or changed sign");
    return omega_S / t * std::log(dn0 / dnt);
}

ModeCouplings discretize_bath(const std::function<double(double)>& J,
                              const Eigen::VectorXd& omega_samples) {
    const int n = static_cast<int>(omega_samples.size());
    if (n < 2) throw std::invalid_argument("discretize_bath: need at least 2 samples");
    for (int i = 1; i < n; ++i)
        if (omega_samples(i) <= omega_samples(i - 1))
            throw std::invalid_argument("discretize_bath: samples must be strictly increasing");
    ModeCouplings mc;
    mc.Omega = omega_samples;
    mc.g.resize(n);
    for (int i = 0; i < n; ++i) {
        const double dw = (i + 1 < n) ? omega_samples(i + 1) - omega_samples(i)
                                      : omega_samples(n - 1) - omega_samples(n - 2);
        const double Ji = J(omega_samples(i));
        if (Ji < 0.0) throw std::runtime_error("discretize_bath: negative spectral density");
        mc.g(i) = std::sqrt(2.0 / std::numbers::pi * Ji * omega_samples(i) * dw);
    }
    return mc;
}

double continuum_damping_kernel(const std::function<double(double)>& J, double t,
                                double omega_hint, double tail_bound) {
    // find a cutoff where J has decayed below tail_bound relative to its peak
    double peak = 0.0;
    double w_hi = omega_hint;
    for (int i = 0; i <= 400; ++i) peak = std::max(peak, J(omega_hint * 0.01 * (i + 1)));
    if (peak <= 0.0) return 0.0;
    int doublings = 0;
    while (J(w_hi) > tail_bound * peak) {
        w_hi *= 2.0;
        if (++doublings > 60)
            throw std::runtime_error("continuum_damping_kernel: integrand does not decay");
    }
    // composite Gauss-Legendre, panel count tied to the oscillation rate
    static const double gl_x[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                   0.5384693101056831, 0.9061798459386640};
    static const double gl_w[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                   0.4786286704993665, 0.2369268850561891};
    const double cycles = w_hi * std::abs(t) / (2.0 * std::numbers::pi);
    const int panels = std::max(64, static_cast<int>(std::ceil(cycles * 6.0)));
    const double h = w_hi / panels;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * h;
        for (int q = 0; q < 5; ++q) {
            const double w = mid + 0.5 * h * gl_x[q];
            // J/w is assumed integrable at 0; the node layout never hits w=0
            acc += gl_w[q] * J(w) / w * std::cos(w * t);
        }
    }
    return 2.0 / std::numbers::pi * acc * 0.5 * h;
}

double bath_recurrence_onset(const ModeCouplings& mc, double floor_ratio, double dt,
                             double t_cap) {
    const double g0 = damping_kernel(mc, 0.0);
    if (g0 <= 0.0) return t_cap;
    bool below = false;
    for (double t = dt; t <= t_cap; t += dt) {
        const double r = std::abs(damping_kernel(mc, t)) / g0;
        if (!below) {
            if (r < floor_ratio) below = true;
        } else if (r >= floor_ratio) {
            return t;
        }
    }
    return t_cap;
}

}  // namespace oscnet

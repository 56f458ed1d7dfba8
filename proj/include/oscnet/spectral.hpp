#pragma once

#include <Eigen/Dense>
#include <functional>

namespace oscnet {

// Environment eigenfrequencies with the system's coupling strengths to them.
struct ModeCouplings {
    Eigen::VectorXd Omega;
    Eigen::VectorXd g;
};

// Sampled spectral density on a frequency grid.
struct SampledSpectralDensity {
    Eigen::VectorXd omega;
    Eigen::VectorXd J;
};

// gamma(t) = sum_i (g_i^2 / Omega_i^2) cos(Omega_i t)
double damping_kernel(const ModeCouplings& mc, double t);

// J(omega) = omega * int_0^tmax gamma(t) cos(omega t) dt, each cosine product
// integrated in closed form.
double windowed_spectral_density_at(const ModeCouplings& mc, double t_max, double omega);
SampledSpectralDensity windowed_spectral_density(const ModeCouplings& mc, double t_max,
                                                 const Eigen::VectorXd& omega_grid);

// Default spectral-density window: the first time the envelope of
// |gamma(t)|/gamma(0) re-exceeds `threshold` after having dropped below it
// (recurrence onset), capped. The envelope is a running maximum over
// `window` time units, which keeps carrier-frequency zero crossings from
// triggering the detector.
double default_t_max(const ModeCouplings& mc, double cap = 200.0, double threshold = 0.2,
                     double dt = 0.25, double window = 20.0);

// Eq-(3.12) probe: J(omega_S) = (omega_S / t) ln(dn(0)/dn(t)) with
// dn(t) = n_thermal(omega_S, T_network) - n_t.
double probe_J(double n_at_0, double n_at_t, double omega_S, double T_network, double t);

// g_i^2 = (2/pi) J(Omega_i) Omega_i dOmega_i, final interval replicated.
ModeCouplings discretize_bath(const std::function<double(double)>& J,
                              const Eigen::VectorXd& omega_samples);

// gamma(t) = (2/pi) int_0^inf (J(w)/w) cos(w t) dw by composite quadrature,
// cut off where the relative tail of J drops below `tail_bound`.
double continuum_damping_kernel(const std::function<double(double)>& J, double t,
                                double omega_hint = 1.0, double tail_bound = 1e-8);

// Noise-floor recurrence detector used for validating bath discretizations:
// first time |gamma(t)|/gamma(0) rises back above floor_ratio after having
// fallen below it.
double bath_recurrence_onset(const ModeCouplings& mc, double floor_ratio = 1e-4,
                             double dt = 0.02, double t_cap = 1e4);

}  // namespace oscnet

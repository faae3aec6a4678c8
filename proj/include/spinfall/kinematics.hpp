// Chart maps between (t, r) and (T, X), radial-infall four-velocity, and the
// momentum/rapidity bookkeeping feeding the spin-step accumulation.
#pragma once

#include <array>
#include <utility>
#include <vector>

#include "spinfall/chart.hpp"

namespace spinfall {

struct MomentumState {
    double m = 1.0;      // rest mass
    double p0 = 1.0;     // local-frame energy
    double alpha = 0.0;  // rapidity, cosh(alpha) = p0/m
    double K = 0.0;      // sqrt((p0 - m)/(p0 + m))
};

struct WorldlineSample {
    double tau = 0.0;                  // proper time from the start sample
    double t = 0.0;                    // Schwarzschild time
    double r = 0.0;                    // areal radius
    double mass = 1.0;                 // black-hole mass the sample was generated with
    KruskalLog klog;                   // overflow-safe Kruskal image
    double T = 0.0;                    // materialized Kruskal time (may overflow far out)
    double X = 0.0;                    // materialized Kruskal position (may overflow far out)
    std::array<double, 4> U_coord{};   // Schwarzschild-chart four-velocity
    std::array<double, 4> U_local{};   // Kruskal-frame velocity from tetrad contraction
    double beta = 0.0;                 // alpha + t/4M
    double dT = 0.0;                   // Kruskal-time increment to the next sample (0 at end)
};

std::pair<double, double> kruskal_from_schwarzschild(double t, double r, double mass);
KruskalLog kruskal_log_from_schwarzschild(double t, double r, double mass);
std::pair<double, double> schwarzschild_from_kruskal(double T, double X, double mass);

// jac[i][j] = d(T, X)_i / d(t, r)_j.
std::array<std::array<double, 2>, 2> kruskal_jacobian(double t, double r, double mass);

MomentumState momentum_state(double p0, double m);
MomentumState momentum_from_rapidity(double alpha, double m = 1.0);

// Infalling radial four-velocity in Schwarzschild components.
std::array<double, 4> radial_velocity(double r, double alpha, double mass);

// Numerically stable e^{a} - e^{b} with both arguments shifted by `shift`.
double shifted_exp_diff(double a, double b, double shift);

// Integrates t(r) and tau(r) from r_start down to r_end with a classical
// 4th-order scheme, attaching Kruskal images and per-step dT increments.
std::vector<WorldlineSample> integrate_worldline(double r_start, double r_end, double alpha0,
                                                 double mass, int n_steps);

}  // namespace spinfall

#include "spinfall/kinematics.hpp"

#include <cmath>
#include <string>

#include "spinfall/errors.hpp"
#include "spinfall/geometry.hpp"

namespace spinfall {

KruskalLog kruskal_log_from_schwarzschild(double t, double r, double mass) {
    if (!(r > 2.0 * mass)) throw DomainError("Kruskal map requires r > 2M");
    KruskalLog out;
    out.log_prefactor = 0.5 * std::log(r / (2.0 * mass) - 1.0) + r / (4.0 * mass);
    out.angle = t / (4.0 * mass);
    return out;
}

std::pair<double, double> kruskal_from_schwarzschild(double t, double r, double mass) {
    const KruskalLog k = kruskal_log_from_schwarzschild(t, r, mass);
    return {k.T(), k.X()};
}

std::pair<double, double> schwarzschild_from_kruskal(double T, double X, double mass) {
    const double u = (X - T) * (X + T);
    if (!(X > 0.0) || !(u > 0.0))
        throw DomainError("inverse Kruskal map requires region I exterior (X > |T|)");
    const double r = kruskal_radius(u, mass).r;
    const double t = 4.0 * mass * std::atanh(T / X);
    return {t, r};
}

std::array<std::array<double, 2>, 2> kruskal_jacobian(double t, double r, double mass) {
    const auto [T, X] = kruskal_from_schwarzschild(t, r, mass);
    const double radial = r / (4.0 * mass * (r - 2.0 * mass));
    return {{{X / (4.0 * mass), radial * T}, {T / (4.0 * mass), radial * X}}};
}

MomentumState momentum_state(double p0, double m) {
    if (!(m > 0.0)) throw DomainError("rest mass must be positive");
    if (p0 < m) throw DomainError("local-frame energy must satisfy p0 >= m");
    MomentumState out;
    out.m = m;
    out.p0 = p0;
    out.alpha = std::acosh(p0 / m);
    out.K = std::sqrt((p0 - m) / (p0 + m));
    return out;
}

MomentumState momentum_from_rapidity(double alpha, double m) {
    if (!(m > 0.0)) throw DomainError("rest mass must be positive");
    if (alpha < 0.0) throw DomainError("rapidity must be non-negative");
    MomentumState out;
    out.m = m;
    out.p0 = m * std::cosh(alpha);
    out.alpha = alpha;
    out.K = std::tanh(alpha / 2.0);
    return out;
}

std::array<double, 4> radial_velocity(double r, double alpha, double mass) {
    if (!(r > 2.0 * mass * (1.0 + horizon_epsilon)))
        throw DomainError("radial velocity requires r > 2M(1+eps)");
    const double f = 1.0 - 2.0 * mass / r;
    const double sf = std::sqrt(f);
    return {std::cosh(alpha) / sf, -sf * std::sinh(alpha), 0.0, 0.0};
}

double shifted_exp_diff(double a, double b, double shift) {
    if (std::abs(a - b) < 1.0) return std::exp(b - shift) * std::expm1(a - b);
    return std::exp(a - shift) - std::exp(b - shift);
}

namespace {

// Materialized T difference between consecutive log-form samples; +-inf when
// the values exceed double range, matching the materialized T fields.
double kruskal_time_increment(const KruskalLog& k1, const KruskalLog& k2) {
    const double sp1 = k1.log_prefactor + k1.angle;
    const double sm1 = k1.log_prefactor - k1.angle;
    const double sp2 = k2.log_prefactor + k2.angle;
    const double sm2 = k2.log_prefactor - k2.angle;
    const double m = std::max(std::max(sp1, sm1), std::max(sp2, sm2));
    const double scaled =
        0.5 * (shifted_exp_diff(sp2, sp1, m) - shifted_exp_diff(sm2, sm1, m));
    if (scaled == 0.0) return 0.0;
    return scaled * std::exp(m);
}

}  // namespace

std::vector<WorldlineSample> integrate_worldline(double r_start, double r_end, double alpha0,
                                                 double mass, int n_steps) {
    if (!(mass > 0.0)) throw DomainError("mass must be positive");
    if (!(alpha0 > 0.0)) throw DomainError("alpha0 must be positive for an infalling worldline");
    if (n_steps < 2) throw DomainError("worldline integration requires n_steps >= 2");
    const double r_min = 2.0 * mass * (1.0 + horizon_epsilon);
    if (!(r_min < r_end && r_end < r_start))
        throw DomainError("worldline requires 2M(1+eps) < r_end < r_start");

    const double coth_a = 1.0 / std::tanh(alpha0);
    const double sinh_a = std::sinh(alpha0);
    auto dt_dr = [&](double r) { return -coth_a / (1.0 - 2.0 * mass / r); };
    auto dtau_dr = [&](double r) {
        return -1.0 / (std::sqrt(1.0 - 2.0 * mass / r) * sinh_a);
    };

    const double h = (r_end - r_start) / n_steps;
    std::vector<WorldlineSample> samples(n_steps + 1);
    double t = 0.0;
    double tau = 0.0;
    for (int k = 0; k <= n_steps; ++k) {
        const double r = r_start + k * h;
        if (!(r > r_min))
            throw StepError("worldline sample " + std::to_string(k) +
                            " left the exterior region (r = " + std::to_string(r) + ")");
        WorldlineSample& s = samples[k];
        s.t = t;
        s.tau = tau;
        s.r = r;
        s.mass = mass;
        s.klog = kruskal_log_from_schwarzschild(t, r, mass);
        s.T = s.klog.T();
        s.X = s.klog.X();
        s.U_coord = radial_velocity(r, alpha0, mass);
        const double theta = t / (4.0 * mass);
        s.U_local = {std::cosh(alpha0 - theta), -std::sinh(alpha0 - theta), 0.0, 0.0};
        s.beta = alpha0 + theta;
        if (k == n_steps) break;
        const double k1t = dt_dr(r);
        const double k2t = dt_dr(r + 0.5 * h);
        const double k4t = dt_dr(r + h);
        t += (h / 6.0) * (k1t + 4.0 * k2t + k4t);
        const double k1y = dtau_dr(r);
        const double k2y = dtau_dr(r + 0.5 * h);
        const double k4y = dtau_dr(r + h);
        tau += (h / 6.0) * (k1y + 4.0 * k2y + k4y);
    }
    for (int k = 0; k < n_steps; ++k)
        samples[k].dT = kruskal_time_increment(samples[k].klog, samples[k + 1].klog);
    return samples;
}

}  // namespace spinfall

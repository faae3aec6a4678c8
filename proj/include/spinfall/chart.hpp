// Chart-tagged spacetime points and the overflow-safe Kruskal representation.
#pragma once

#include <array>
#include <cmath>

#include "spinfall/errors.hpp"

namespace spinfall {

// Schwarzschild-chart operations reject r <= 2M(1 + horizon_epsilon).
inline constexpr double horizon_epsilon = 1e-9;

enum class Chart { Schwarzschild, Kruskal };

// Coordinates are (t, r, theta, phi) or (T, X, theta, phi) in geometric units.
struct ChartPoint {
    Chart chart = Chart::Schwarzschild;
    std::array<double, 4> x{};
    double mass = 1.0;
};

inline ChartPoint schwarzschild_point(double t, double r, double theta, double phi, double mass) {
    return ChartPoint{Chart::Schwarzschild, {t, r, theta, phi}, mass};
}

inline ChartPoint kruskal_point(double T, double X, double theta, double phi, double mass) {
    return ChartPoint{Chart::Kruskal, {T, X, theta, phi}, mass};
}

// Log-form Kruskal pair: T = e^L sinh(angle), X = e^L cosh(angle) with
// L = (1/2)ln(r/2M - 1) + r/4M and angle = t/4M.  Keeps far-field points
// representable where e^L alone would overflow a double.
struct KruskalLog {
    double log_prefactor = 0.0;
    double angle = 0.0;

    double T() const { return std::exp(log_prefactor) * std::sinh(angle); }
    double X() const { return std::exp(log_prefactor) * std::cosh(angle); }
};

inline void validate_point(const ChartPoint& p) {
    if (!(p.mass > 0.0)) throw DomainError("mass must be positive");
    const double theta = p.x[2];
    if (!(theta > 0.0 && theta < 3.14159265358979323846))
        throw DomainError("theta must lie strictly inside (0, pi)");
    if (p.chart == Chart::Schwarzschild) {
        const double r = p.x[1];
        if (!(r > 2.0 * p.mass * (1.0 + horizon_epsilon)))
            throw DomainError("Schwarzschild chart requires r > 2M(1+eps)");
    } else {
        const double T = p.x[0];
        const double X = p.x[1];
        if (!((X - T) * (X + T) > -1.0))
            throw DomainError("Kruskal chart requires X^2 - T^2 > -1");
    }
}

}  // namespace spinfall

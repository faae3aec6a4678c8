// Metrics, tetrads, Christoffel symbols, connection one-forms, and
// Killing-vector diagnostics for the Schwarzschild and Kruskal charts.
#pragma once

#include <array>

#include "spinfall/chart.hpp"
#include "spinfall/linalg.hpp"

namespace spinfall {

// Diagonal metric g_{mu nu} with signature (-,+,+,+).
struct Metric {
    Mat4 g{};
};

// forward[a][mu] = e_a^mu (frame -> coordinate), inverse[a][mu] = e^a_mu.
struct Tetrad {
    Mat4 forward{};
    Mat4 inverse{};
    ChartPoint point;
};

// gamma[mu][nu][lambda] = Gamma^mu_{nu lambda}, symmetric in (nu, lambda).
struct ChristoffelSymbols {
    std::array<Mat4, 4> gamma{};
};

// w[a][b][nu] = omega^a_{b,nu}, the connection one-form coefficients.
struct ConnectionOneForms {
    std::array<Mat4, 4> w{};
};

struct KillingField {
    std::array<double, 4> xi{};
};

struct NewtonResult {
    double r = 0.0;
    int iterations = 0;
};

// Inverts (r/2M - 1)e^{r/2M} = u for r, valid for u > -1 (horizon at u = 0).
NewtonResult kruskal_radius(double x2_minus_t2, double mass);

Metric metric_at(const ChartPoint& point);
Tetrad tetrad_at(const ChartPoint& point);
ChristoffelSymbols christoffel_analytic(const ChartPoint& point);

// Central finite differences of metric_at with one Richardson level;
// independent oracle for christoffel_analytic.
ChristoffelSymbols christoffel_numeric(const ChartPoint& point, double h = 1e-6);

// omega^a_{b,nu} = e^a_mu (d_nu e_b^mu + Gamma^mu_{kappa nu} e_b^kappa),
// with analytic tetrad derivatives.
ConnectionOneForms connection_one_forms(const ChartPoint& point);

// Same contraction built from finite-difference tetrad derivatives and
// christoffel_numeric; oracle for connection_one_forms.
ConnectionOneForms connection_one_forms_numeric(const ChartPoint& point, double h = 1e-6);

// Lambda^a_b = delta^a_b + omega^a_{b,nu} dx^nu.
Mat4 lorentz_step(const ConnectionOneForms& forms, const std::array<double, 4>& displacement);

KillingField killing_vector(const ChartPoint& point);

// Norm g(xi, xi) of the Killing field at the point.
double killing_norm(const ChartPoint& point);

// Max |nabla_mu xi_nu + nabla_nu xi_mu| via finite differences,
// scaled by the largest contributing term at the point.
double killing_residual(const ChartPoint& point, double h = 1e-6);

// Max |nabla_lambda g_{mu nu}| via finite differences of the metric and the
// given Christoffel symbols; metric-compatibility diagnostic.
double metric_compatibility_residual(const ChartPoint& point, const ChristoffelSymbols& chr,
                                     double h = 1e-6);

}  // namespace spinfall

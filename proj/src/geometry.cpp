#include "spinfall/geometry.hpp"

#include <cmath>

namespace spinfall {

namespace {

// Local Kruskal data derived from (T, X): radius, conformal factor, and its
// coordinate gradients.
struct KruskalLocal {
    double r;
    double F;
    double Fp;   // dF/dr
    double rT;   // dr/dT
    double rX;   // dr/dX
};

KruskalLocal kruskal_local(const ChartPoint& p) {
    const double T = p.x[0];
    const double X = p.x[1];
    const double M = p.mass;
    const double u = (X - T) * (X + T);
    KruskalLocal loc{};
    loc.r = kruskal_radius(u, M).r;
    loc.F = (32.0 * M * M * M / loc.r) * std::exp(-loc.r / (2.0 * M));
    loc.Fp = -loc.F * (loc.r + 2.0 * M) / (2.0 * M * loc.r);
    loc.rT = -loc.F * T / (4.0 * M);
    loc.rX = loc.F * X / (4.0 * M);
    return loc;
}

// Diagonal co-tetrad entries E_a (e^a_mu = E_a delta^a_mu) and their
// coordinate derivatives dE[nu][a].
struct DiagonalFrame {
    std::array<double, 4> E{};
    std::array<std::array<double, 4>, 4> dE{};
};

DiagonalFrame frame_schwarzschild(const ChartPoint& p) {
    const double r = p.x[1];
    const double theta = p.x[2];
    const double M = p.mass;
    const double f = 1.0 - 2.0 * M / r;
    const double fp = 2.0 * M / (r * r);
    const double sf = std::sqrt(f);
    DiagonalFrame fr;
    fr.E = {sf, 1.0 / sf, r, r * std::sin(theta)};
    fr.dE[1][0] = fp / (2.0 * sf);
    fr.dE[1][1] = -fp / (2.0 * f * sf);
    fr.dE[1][2] = 1.0;
    fr.dE[1][3] = std::sin(theta);
    fr.dE[2][3] = r * std::cos(theta);
    return fr;
}

DiagonalFrame frame_kruskal(const ChartPoint& p) {
    const double theta = p.x[2];
    const KruskalLocal loc = kruskal_local(p);
    const double sF = std::sqrt(loc.F);
    DiagonalFrame fr;
    fr.E = {sF, sF, loc.r, loc.r * std::sin(theta)};
    const double dsF_dr = loc.Fp / (2.0 * sF);
    const std::array<double, 2> dr = {loc.rT, loc.rX};
    for (int nu = 0; nu < 2; ++nu) {
        fr.dE[nu][0] = dsF_dr * dr[nu];
        fr.dE[nu][1] = dsF_dr * dr[nu];
        fr.dE[nu][2] = dr[nu];
        fr.dE[nu][3] = dr[nu] * std::sin(theta);
    }
    fr.dE[2][3] = loc.r * std::cos(theta);
    return fr;
}

DiagonalFrame frame_at(const ChartPoint& p) {
    return p.chart == Chart::Schwarzschild ? frame_schwarzschild(p) : frame_kruskal(p);
}

}  // namespace

NewtonResult kruskal_radius(double x2_minus_t2, double mass) {
    if (!(mass > 0.0)) throw DomainError("mass must be positive");
    if (!std::isfinite(x2_minus_t2)) throw DomainError("X^2 - T^2 is not finite");
    if (!(x2_minus_t2 > -1.0)) throw DomainError("X^2 - T^2 must exceed -1");
    const double z = x2_minus_t2 / std::exp(1.0);
    double s;
    if (z <= 0.0) {
        s = z;
    } else if (z <= std::exp(1.0)) {
        s = std::min(z, 1.0);
    } else {
        const double l1 = std::log(z);
        const double l2 = std::log(l1);
        s = l1 - l2 + l2 / l1;
    }
    NewtonResult res{};
    for (int it = 1; it <= 50; ++it) {
        // ds = (s e^s - z) / ((1+s) e^s), written to avoid overflow of e^s.
        const double ze = z > 0.0 ? std::exp(std::log(z) - s) : z * std::exp(-s);
        const double ds = (s - ze) / (1.0 + s);
        s -= ds;
        res.iterations = it;
        if (std::abs(ds) < 1e-12) {
            res.r = 2.0 * mass * (1.0 + s);
            return res;
        }
    }
    throw ConvergenceError("Kruskal radius Newton solve did not converge in 50 iterations");
}

Metric metric_at(const ChartPoint& point) {
    validate_point(point);
    const double theta = point.x[2];
    const double s2 = std::sin(theta) * std::sin(theta);
    Metric out;
    if (point.chart == Chart::Schwarzschild) {
        const double r = point.x[1];
        const double f = 1.0 - 2.0 * point.mass / r;
        out.g[0][0] = -f;
        out.g[1][1] = 1.0 / f;
        out.g[2][2] = r * r;
        out.g[3][3] = r * r * s2;
    } else {
        const KruskalLocal loc = kruskal_local(point);
        out.g[0][0] = -loc.F;
        out.g[1][1] = loc.F;
        out.g[2][2] = loc.r * loc.r;
        out.g[3][3] = loc.r * loc.r * s2;
    }
    return out;
}

Tetrad tetrad_at(const ChartPoint& point) {
    validate_point(point);
    const DiagonalFrame fr = frame_at(point);
    Tetrad out;
    out.point = point;
    for (int a = 0; a < 4; ++a) {
        out.inverse[a][a] = fr.E[a];
        out.forward[a][a] = 1.0 / fr.E[a];
    }
    return out;
}

ChristoffelSymbols christoffel_analytic(const ChartPoint& point) {
    validate_point(point);
    const double theta = point.x[2];
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    ChristoffelSymbols out;
    auto set = [&out](int mu, int nu, int la, double v) {
        out.gamma[mu][nu][la] = v;
        out.gamma[mu][la][nu] = v;
    };
    if (point.chart == Chart::Schwarzschild) {
        const double r = point.x[1];
        const double M = point.mass;
        const double f = 1.0 - 2.0 * M / r;
        set(0, 0, 1, M / (r * r * f));
        set(1, 0, 0, M * f / (r * r));
        set(1, 1, 1, -M / (r * r * f));
        set(1, 2, 2, -r * f);
        set(1, 3, 3, -r * f * st * st);
        set(2, 1, 2, 1.0 / r);
        set(2, 3, 3, -st * ct);
        set(3, 1, 3, 1.0 / r);
        set(3, 2, 3, ct / st);
    } else {
        const KruskalLocal loc = kruskal_local(point);
        const double aT = loc.Fp * loc.rT / (2.0 * loc.F);
        const double aX = loc.Fp * loc.rX / (2.0 * loc.F);
        set(0, 0, 0, aT);
        set(0, 1, 1, aT);
        set(0, 0, 1, aX);
        set(1, 0, 0, aX);
        set(1, 1, 1, aX);
        set(1, 0, 1, aT);
        set(0, 2, 2, loc.r * loc.rT / loc.F);
        set(0, 3, 3, loc.r * loc.rT * st * st / loc.F);
        set(1, 2, 2, -loc.r * loc.rX / loc.F);
        set(1, 3, 3, -loc.r * loc.rX * st * st / loc.F);
        set(2, 0, 2, loc.rT / loc.r);
        set(2, 1, 2, loc.rX / loc.r);
        set(3, 0, 3, loc.rT / loc.r);
        set(3, 1, 3, loc.rX / loc.r);
        set(2, 3, 3, -st * ct);
        set(3, 2, 3, ct / st);
    }
    return out;
}

namespace {

// Central difference with one Richardson extrapolation level, applied to a
// Mat4-valued function of one coordinate.
template <typename Fn>
Mat4 richardson_derivative(const Fn& fn, const ChartPoint& base, int nu, double h) {
    const double step = h * std::max(1.0, std::abs(base.x[nu]));
    auto central = [&](double hh) {
        ChartPoint plus = base;
        ChartPoint minus = base;
        plus.x[nu] += hh;
        minus.x[nu] -= hh;
        const Mat4 gp = fn(plus);
        const Mat4 gm = fn(minus);
        Mat4 d{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) d[i][j] = (gp[i][j] - gm[i][j]) / (2.0 * hh);
        return d;
    };
    const Mat4 d1 = central(step);
    const Mat4 d2 = central(step / 2.0);
    Mat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = (4.0 * d2[i][j] - d1[i][j]) / 3.0;
    return out;
}

}  // namespace

ChristoffelSymbols christoffel_numeric(const ChartPoint& point, double h) {
    validate_point(point);
    auto metric_fn = [](const ChartPoint& p) { return metric_at(p).g; };
    std::array<Mat4, 4> dg;
    for (int nu = 0; nu < 4; ++nu) dg[nu] = richardson_derivative(metric_fn, point, nu, h);
    const Mat4 g = metric_at(point).g;
    ChristoffelSymbols out;
    for (int mu = 0; mu < 4; ++mu) {
        const double ginv = 1.0 / g[mu][mu];
        for (int nu = 0; nu < 4; ++nu)
            for (int la = nu; la < 4; ++la) {
                const double v =
                    0.5 * ginv * (dg[nu][mu][la] + dg[la][mu][nu] - dg[mu][nu][la]);
                out.gamma[mu][nu][la] = v;
                out.gamma[mu][la][nu] = v;
            }
    }
    return out;
}

ConnectionOneForms connection_one_forms(const ChartPoint& point) {
    const DiagonalFrame fr = frame_at(point);
    const ChristoffelSymbols chr = christoffel_analytic(point);
    ConnectionOneForms out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int nu = 0; nu < 4; ++nu) {
                if (a == b)
                    out.w[a][b][nu] = chr.gamma[a][b][nu] - fr.dE[nu][a] / fr.E[a];
                else
                    out.w[a][b][nu] = (fr.E[a] / fr.E[b]) * chr.gamma[a][b][nu];
            }
    return out;
}

ConnectionOneForms connection_one_forms_numeric(const ChartPoint& point, double h) {
    const Tetrad tet = tetrad_at(point);
    const ChristoffelSymbols chr = christoffel_numeric(point, h);
    auto forward_fn = [](const ChartPoint& p) { return tetrad_at(p).forward; };
    std::array<Mat4, 4> de;
    for (int nu = 0; nu < 4; ++nu) de[nu] = richardson_derivative(forward_fn, point, nu, h);
    ConnectionOneForms out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int nu = 0; nu < 4; ++nu) {
                double sum = 0.0;
                for (int mu = 0; mu < 4; ++mu) {
                    double cov = de[nu][b][mu];
                    for (int ka = 0; ka < 4; ++ka)
                        cov += chr.gamma[mu][ka][nu] * tet.forward[b][ka];
                    sum += tet.inverse[a][mu] * cov;
                }
                out.w[a][b][nu] = sum;
            }
    return out;
}

Mat4 lorentz_step(const ConnectionOneForms& forms, const std::array<double, 4>& displacement) {
    Mat4 out = mat4_identity();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int nu = 0; nu < 4; ++nu) out[a][b] += forms.w[a][b][nu] * displacement[nu];
    return out;
}

KillingField killing_vector(const ChartPoint& point) {
    if (point.chart != Chart::Kruskal) throw DomainError("Killing field is defined on the Kruskal chart");
    validate_point(point);
    KillingField out;
    out.xi = {point.x[1] / (4.0 * point.mass), point.x[0] / (4.0 * point.mass), 0.0, 0.0};
    return out;
}

double killing_norm(const ChartPoint& point) {
    const KillingField k = killing_vector(point);
    const Mat4 g = metric_at(point).g;
    double s = 0.0;
    for (int mu = 0; mu < 4; ++mu) s += g[mu][mu] * k.xi[mu] * k.xi[mu];
    return s;
}

double killing_residual(const ChartPoint& point, double h) {
    auto covector_fn = [](const ChartPoint& p) {
        const KillingField k = killing_vector(p);
        const Mat4 g = metric_at(p).g;
        Mat4 out{};
        for (int nu = 0; nu < 4; ++nu) out[0][nu] = g[nu][nu] * k.xi[nu];
        return out;
    };
    std::array<Mat4, 4> dxi;
    for (int nu = 0; nu < 4; ++nu) dxi[nu] = richardson_derivative(covector_fn, point, nu, h);
    const KillingField k = killing_vector(point);
    const Mat4 g = metric_at(point).g;
    const ChristoffelSymbols chr = christoffel_numeric(point, h);
    double worst = 0.0;
    double scale = 1.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            double v = dxi[mu][0][nu] + dxi[nu][0][mu];
            scale = std::max(scale, std::abs(dxi[mu][0][nu]));
            for (int la = 0; la < 4; ++la) {
                const double term = 2.0 * chr.gamma[la][mu][nu] * g[la][la] * k.xi[la];
                v -= term;
                scale = std::max(scale, std::abs(term));
            }
            worst = std::max(worst, std::abs(v));
        }
    return worst / scale;
}

double metric_compatibility_residual(const ChartPoint& point, const ChristoffelSymbols& chr,
                                     double h) {
    auto metric_fn = [](const ChartPoint& p) { return metric_at(p).g; };
    std::array<Mat4, 4> dg;
    for (int nu = 0; nu < 4; ++nu) dg[nu] = richardson_derivative(metric_fn, point, nu, h);
    const Mat4 g = metric_at(point).g;
    double worst = 0.0;
    for (int la = 0; la < 4; ++la)
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                double v = dg[la][mu][nu];
                for (int si = 0; si < 4; ++si)
                    v -= chr.gamma[si][mu][la] * g[si][nu] + chr.gamma[si][nu][la] * g[mu][si];
                worst = std::max(worst, std::abs(v));
            }
    return worst;
}

}  // namespace spinfall

// Chart maps, momentum bookkeeping, and the radial worldline integrator.
#include <cmath>
#include <utility>

#include "doctest.h"
#include "spinfall/kinematics.hpp"

using namespace spinfall;

namespace {
constexpr double kE = 2.718281828459045;
}  // namespace

TEST_CASE("forward map reference values") {
    const auto [T, X] = kruskal_from_schwarzschild(0.0, 4.0, 1.0);
    CHECK(T == 0.0);
    CHECK(X == doctest::Approx(kE).epsilon(1e-14));
    const KruskalLog k = kruskal_log_from_schwarzschild(0.0, 4.0, 1.0);
    CHECK(k.angle == 0.0);
    CHECK(k.log_prefactor == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(kruskal_log_from_schwarzschild(0.0, 2.0, 1.0), DomainError);
}

TEST_CASE("round trip through the kruskal chart") {
    const double t = 3.7;
    const double r = 5.2;
    const double mass = 1.3;
    const auto [T, X] = kruskal_from_schwarzschild(t, r, mass);
    const auto [t2, r2] = schwarzschild_from_kruskal(T, X, mass);
    CHECK(t2 == doctest::Approx(t).epsilon(1e-12));
    CHECK(r2 == doctest::Approx(r).epsilon(1e-12));
    CHECK_THROWS_AS(schwarzschild_from_kruskal(0.5, -1.0, 1.0), DomainError);
    CHECK_THROWS_AS(schwarzschild_from_kruskal(1.2, 0.7, 1.0), DomainError);
}

TEST_CASE("jacobian matches finite differences of the forward map") {
    const double t = 1.3;
    const double r = 5.0;
    const double h = 1e-6;
    const auto J = kruskal_jacobian(t, r, 1.0);
    const auto [Tp, Xp] = kruskal_from_schwarzschild(t + h, r, 1.0);
    const auto [Tm, Xm] = kruskal_from_schwarzschild(t - h, r, 1.0);
    CHECK(J[0][0] == doctest::Approx((Tp - Tm) / (2.0 * h)).epsilon(1e-8));
    CHECK(J[1][0] == doctest::Approx((Xp - Xm) / (2.0 * h)).epsilon(1e-8));
    const auto [Tr, Xr] = kruskal_from_schwarzschild(t, r + h, 1.0);
    const auto [Tl, Xl] = kruskal_from_schwarzschild(t, r - h, 1.0);
    CHECK(J[0][1] == doctest::Approx((Tr - Tl) / (2.0 * h)).epsilon(1e-8));
    CHECK(J[1][1] == doctest::Approx((Xr - Xl) / (2.0 * h)).epsilon(1e-8));
}

TEST_CASE("momentum state constructors agree") {
    const MomentumState a = momentum_state(std::cosh(0.8), 1.0);
    CHECK(a.alpha == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(a.K == doctest::Approx(std::tanh(0.4)).epsilon(1e-12));
    const MomentumState b = momentum_from_rapidity(0.8);
    CHECK(b.p0 == doctest::Approx(a.p0).epsilon(1e-14));
    CHECK(b.K == doctest::Approx(a.K).epsilon(1e-12));
    CHECK(momentum_state(1.0, 1.0).K == 0.0);
    CHECK_THROWS_AS(momentum_state(0.5, 1.0), DomainError);
    CHECK_THROWS_AS(momentum_from_rapidity(-0.1), DomainError);
    CHECK_THROWS_AS(momentum_from_rapidity(1.0, 0.0), DomainError);
}

TEST_CASE("radial velocity is normalized and infalling") {
    const auto U = radial_velocity(5.0, 0.7, 1.0);
    const double f = 1.0 - 2.0 / 5.0;
    CHECK(-f * U[0] * U[0] + U[1] * U[1] / f == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(U[1] < 0.0);
    CHECK_THROWS_AS(radial_velocity(2.0, 0.7, 1.0), DomainError);
}

TEST_CASE("shifted exponential difference") {
    CHECK(shifted_exp_diff(0.300000001, 0.3, 0.0) ==
          doctest::Approx(std::exp(0.3) * 1e-9).epsilon(1e-6));
    CHECK(shifted_exp_diff(1000.0, 999.0, 1000.0) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
    CHECK(shifted_exp_diff(2.0, 1.0, 0.0) ==
          doctest::Approx(std::exp(2.0) - std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("worldline integration basics") {
    const auto wl = integrate_worldline(6.0, 2.2, 1.0, 1.0, 400);
    REQUIRE(wl.size() == 401);
    CHECK(wl.front().r == 6.0);
    CHECK(wl.back().r == doctest::Approx(2.2).epsilon(1e-14));
    CHECK(wl.front().t == 0.0);
    CHECK(wl.front().tau == 0.0);
    CHECK(wl.front().beta == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(wl.front().U_local[0] == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
    CHECK(wl.front().U_local[1] == doctest::Approx(-std::sinh(1.0)).epsilon(1e-14));
    for (std::size_t i = 1; i < wl.size(); ++i) {
        CHECK(wl[i].t > wl[i - 1].t);
        CHECK(wl[i].tau > wl[i - 1].tau);
        CHECK(wl[i].r < wl[i - 1].r);
        CHECK(wl[i].beta == doctest::Approx(1.0 + wl[i].t / 4.0).epsilon(1e-13));
    }
    CHECK(wl.back().dT == 0.0);
    CHECK(wl.front().mass == 1.0);
}

TEST_CASE("worldline time integration converges at fourth order") {
    const double t500 = integrate_worldline(6.0, 2.2, 1.0, 1.0, 500).back().t;
    const double t1000 = integrate_worldline(6.0, 2.2, 1.0, 1.0, 1000).back().t;
    const double t2000 = integrate_worldline(6.0, 2.2, 1.0, 1.0, 2000).back().t;
    const double ratio = (t500 - t1000) / (t1000 - t2000);
    CHECK(ratio > 12.0);
    CHECK(ratio < 20.0);
}

TEST_CASE("kruskal time increments match materialized differences") {
    const auto wl = integrate_worldline(10.0, 5.0, 0.5, 1.0, 100);
    for (std::size_t i : {std::size_t{0}, std::size_t{50}, std::size_t{98}}) {
        const double direct = wl[i + 1].T - wl[i].T;
        const double tol = 1e-10 * std::max(std::fabs(wl[i].T), std::fabs(wl[i + 1].T)) + 1e-14;
        CHECK(std::fabs(wl[i].dT - direct) < tol);
    }
}

TEST_CASE("worldline integration rejects bad input") {
    CHECK_THROWS_AS(integrate_worldline(6.0, 2.2, 0.0, 1.0, 100), DomainError);
    CHECK_THROWS_AS(integrate_worldline(6.0, 1.9, 1.0, 1.0, 100), DomainError);
    CHECK_THROWS_AS(integrate_worldline(2.2, 6.0, 1.0, 1.0, 100), DomainError);
    CHECK_THROWS_AS(integrate_worldline(6.0, 2.2, 1.0, 1.0, 1), DomainError);
    CHECK_THROWS_AS(integrate_worldline(6.0, 2.2, 1.0, -1.0, 100), DomainError);
}

// Step matrix goldens, accumulation algebra, and the far-field saturation
// behavior of the radial spin transport.
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "spinfall/wigner.hpp"

using namespace spinfall;

namespace {
constexpr double kE = 2.718281828459045;

StepInputs reference_inputs() {
    StepInputs in;
    in.a = scalar_a(4.0, 1.0);
    in.b = scalar_b(4.0, 1.0);
    in.beta = 1.0;
    in.K = 1.0 / 3.0;
    in.T = 0.1;
    in.X = kE;
    in.dT = 1e-3;
    return in;
}
}  // namespace

TEST_CASE("step scalars") {
    CHECK(scalar_a(4.0, 1.0) == doctest::Approx(1.9221155140795584).epsilon(1e-14));
    CHECK(scalar_a(4.0, 1.0) == doctest::Approx(0.5 * std::sqrt(2.0) * kE).epsilon(1e-14));
    CHECK(scalar_b(4.0, 1.0) == 0.25);
    CHECK(scalar_a(2.0, 1.0) == 0.0);
    CHECK(scalar_b(2.0, 1.0) == 0.0);
    CHECK_THROWS_AS(scalar_a(1.9, 1.0), DomainError);
    CHECK_THROWS_AS(scalar_b(1.9, 1.0), DomainError);
    CHECK_THROWS_AS(scalar_a(4.0, 0.0), DomainError);
}

TEST_CASE("radial step matrix golden values") {
    const SpinorMap D = step_matrix(reference_inputs());
    CHECK(D(0, 0).real() == doctest::Approx(0.99998490504102913).epsilon(1e-14));
    CHECK(D(0, 1).real() == doctest::Approx(-9.1269807059043967e-5).epsilon(1e-12));
    CHECK(D(0, 0).imag() == 0.0);
    CHECK(D(0, 1).imag() == 0.0);
    CHECK(D(1, 1) == D(0, 0));
    CHECK(D(1, 0) == D(0, 1));
}

TEST_CASE("step matrix singular inputs") {
    StepInputs in = reference_inputs();
    in.beta = 0.0;
    CHECK_THROWS_AS(step_matrix(in), SingularInputError);
    in = reference_inputs();
    in.X = 0.0;
    CHECK_THROWS_AS(step_matrix(in), SingularInputError);
    in = reference_inputs();
    in.K = 1.0;
    CHECK_THROWS_AS(step_matrix(in), SingularInputError);
    in = reference_inputs();
    in.T = 0.0;
    in.dtheta = 1e-4;
    CHECK_THROWS_AS(step_matrix(in), SingularInputError);
    in.dtheta = 0.0;
    CHECK_NOTHROW(step_matrix(in));
}

TEST_CASE("flat limit step") {
    const SpinorMap D = flat_limit_step(1e-4);
    CHECK(su2_form_check(D, 1e-8));
    CHECK(unitarity_deviation(D) < 1e-7);
    CHECK(D(0, 1) == cplx(0.0, -0.5e-4));
    CHECK(D(1, 0) == cplx(0.0, -0.5e-4));
    CHECK(D(0, 0) == cplx(1.0, 0.0));
}

TEST_CASE("accumulation rejects bad input") {
    const std::vector<WorldlineSample> empty;
    const MomentumState mom = momentum_from_rapidity(1.0);
    CHECK_THROWS_AS(accumulate(empty, mom), DomainError);
    CHECK_THROWS_AS(closed_form_radial(empty, mom), DomainError);
    CHECK_THROWS_AS(segment_factors(empty, mom), DomainError);
    const auto wl = integrate_worldline(6.0, 4.0, 1.0, 1.0, 10);
    MomentumState lightlike;
    lightlike.K = 1.0;
    CHECK_THROWS_AS(accumulate(wl, lightlike), SingularInputError);
    CHECK_THROWS_AS(segment_factors(wl, lightlike), SingularInputError);
}

TEST_CASE("segment factors reproduce the accumulated product") {
    const auto wl = integrate_worldline(6.0, 2.5, 0.8, 1.0, 50);
    const MomentumState mom = momentum_from_rapidity(0.8);
    const auto factors = segment_factors(wl, mom);
    REQUIRE(factors.size() == 50);
    SpinorMap product = mat2_identity();
    for (const SpinorMap& f : factors) product = f * product;
    CHECK(frobenius(product - accumulate(wl, mom)) < 1e-15);
}

TEST_CASE("segment order does not matter for the radial algebra") {
    const auto wl = integrate_worldline(6.0, 3.0, 1.0, 1.0, 200);
    const MomentumState mom = momentum_from_rapidity(1.0);
    const SpinorMap a = accumulate(wl, mom);
    const SpinorMap b = accumulate_reversed(wl, mom);
    CHECK(frobenius(a - b) < 1e-12);
}

TEST_CASE("accumulated map is real symmetric and non-unitary") {
    const auto wl = integrate_worldline(6.0, 2.2, 1.0, 1.0, 2000);
    const MomentumState mom = momentum_from_rapidity(1.0);
    const SpinorMap D = accumulate(wl, mom);
    CHECK(D(0, 0).imag() == 0.0);
    CHECK(D(0, 1).imag() == 0.0);
    CHECK(D(1, 1) == D(0, 0));
    CHECK(D(1, 0) == D(0, 1));
    CHECK(unitarity_deviation(D) > 1e-3);
    CHECK(D(0, 0).real() > 0.0);
    CHECK(D(0, 1).real() < 0.0);
}

TEST_CASE("exponential integral comparator structure") {
    const auto wl = integrate_worldline(6.0, 2.2, 1.0, 1.0, 500);
    const MomentumState mom = momentum_from_rapidity(1.0);
    const SpinorMap C = closed_form_radial(wl, mom);
    CHECK(C(0, 0).imag() == 0.0);
    CHECK(C(1, 1) == C(0, 0));
    CHECK(C(1, 0) == C(0, 1));
    CHECK(C(0, 0).real() > 0.0);
    CHECK(C(0, 0).real() < 1.0);
    CHECK(C(0, 1).real() < 0.0);
    CHECK(C(0, 1).real() > -1.0);
}

TEST_CASE("far field segments saturate instead of flattening") {
    const double alpha0 = 2.0 * std::atanh(1e-6);
    const MomentumState mom = momentum_from_rapidity(alpha0);
    CHECK(mom.K == doctest::Approx(1e-6).epsilon(1e-12));
    const auto wl = integrate_worldline(1e6, 1e6 - 10.0, alpha0, 1.0, 1000);
    const SpinorMap D = accumulate(wl, mom);
    CHECK_FALSE(finite(D));
    CHECK(std::isinf(D(0, 0).real()));
    CHECK(D(0, 1).real() == -std::numeric_limits<double>::infinity());
    CHECK(std::isnan(unitarity_deviation(D)));
    const SpinorMap C = closed_form_radial(wl, mom);
    CHECK(finite(C));
    CHECK(unitarity_deviation(C) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-6));
}

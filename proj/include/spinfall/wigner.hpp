// Infinitesimal spin-1/2 step matrix in the Kruskal frame, its flat-space
// limit, the accumulated transformation along a radial worldline, a literal
// exponential-integral comparator, and unitarity diagnostics.
#pragma once

#include <vector>

#include "spinfall/kinematics.hpp"
#include "spinfall/linalg.hpp"

namespace spinfall {

struct StepInputs {
    double a = 0.0;       // (r/2M)^{1/2}(1 - 2M/r)exp(r/4M)
    double b = 0.0;       // (2M/r - 1)^2
    double beta = 0.0;    // rapidity alpha + t/4M
    double K = 0.0;       // kinematic factor, 0 <= K < 1
    double T = 0.0;       // Kruskal time
    double X = 0.0;       // Kruskal position
    double dT = 0.0;      // Kruskal-time increment
    double dtheta = 0.0;  // polar increment
    double dphi = 0.0;    // azimuthal increment
};

using SpinorMap = Mat2;

double scalar_a(double r, double mass);
double scalar_b(double r, double mass);

// First-order step matrix, all entries as printed in the infinitesimal
// Wigner representation.
SpinorMap step_matrix(const StepInputs& inputs);

// K -> 0, X -> inf limit with only dphi nonzero: I - i(dphi/2) sigma1.
SpinorMap flat_limit_step(double dphi);

// Per-segment exponential factors exp(-A_i) in worldline order; left-multiplying
// them one by one reproduces accumulate() prefix by prefix.
std::vector<SpinorMap> segment_factors(const std::vector<WorldlineSample>& worldline,
                                       const MomentumState& mom);

// Ordered product of per-segment exponentials exp(-A_i) of the
// midpoint-evaluated radial generator; later Kruskal-T factors on the left.
SpinorMap accumulate(const std::vector<WorldlineSample>& worldline, const MomentumState& mom);

// Same segments multiplied in the opposite order; the radial step algebra is
// spanned by {I, sigma1}, so the two must agree.
SpinorMap accumulate_reversed(const std::vector<WorldlineSample>& worldline,
                              const MomentumState& mom);

// Literal exponential-integral comparator: diagonal exp(-I1), off-diagonal
// exp(-I2) - 1, with midpoint-rule integrals over the worldline segments.
SpinorMap closed_form_radial(const std::vector<WorldlineSample>& worldline,
                             const MomentumState& mom);

// ||D^dagger D - I||_Frobenius.
double unitarity_deviation(const SpinorMap& D);

// True iff D22 = D11*, D21 = -D12*, and |D11|^2 + |D12|^2 = 1 within tol.
bool su2_form_check(const SpinorMap& D, double tol);

}  // namespace spinfall

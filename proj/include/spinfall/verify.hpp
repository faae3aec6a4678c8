// Cross-module verification checks: each check measures a residual against a
// tolerance and reports it; informational checks report without failing.
#pragma once

#include <string>
#include <vector>

namespace spinfall {

struct CheckResult {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = true;
    bool informational = false;
    std::string note;
};

// Max |e^a_mu e^b_nu eta_ab - g_mu nu| over sampled points in both charts.
// tetrad_perturb scales one tetrad entry, as a sensitivity test hook.
CheckResult check_tetrad_compatibility(double tetrad_perturb = 0.0);

// Max |e_a^mu e^a_nu - delta^mu_nu| over the same sampling.
CheckResult check_tetrad_duality();

// Finite-difference vs analytic Christoffel symbols, matrix-scale relative
// error over Schwarzschild r in [2.5M, 100M] and a region-I Kruskal grid.
CheckResult check_christoffel_oracle();

// Lowered-index antisymmetry of the connection one-forms.
CheckResult check_connection_antisymmetry();

// Analytic connection one-forms vs the finite-difference contraction.
CheckResult check_connection_oracle();

// Chart-map Jacobian applied to the Kruskal metric reproduces the
// Schwarzschild (t, r) block.
CheckResult check_metric_pullback();

// Killing equation residual over a region-I grid.
CheckResult check_killing_residual();

// Sign of g(xi, xi) matches |X| vs |T| at sampled points.
CheckResult check_killing_causality();

// (t, r) -> (T, X) -> (t, r) round trip accuracy and Newton iteration budget.
CheckResult check_roundtrip();

// X^2 - T^2 = (r/2M - 1)e^{r/2M} on the forward map.
CheckResult check_forward_identity();

// Four-velocity normalization, coordinate and local frame, along integrated
// trajectories.
CheckResult check_worldline_normalization();

// Forward vs reversed accumulation order along a radial worldline.
CheckResult check_commutation();

// Richardson ratio of the accumulated map under step halving.
CheckResult check_refinement_ratio();

// apply_map on the spin-up state vs the literal output-state formula, and the
// unnormalized entropy vs -t log2 t.
CheckResult check_channel_consistency();

// Entropy of pure and maximally mixed states, and unitary invariance.
CheckResult check_entropy_invariants();

// Byte-identical CSV output for two identical trajectory runs.
CheckResult check_determinism();

// Informational: computed omega^0_{1,T} and omega^3_{2,phi} vs the literal
// printed closed forms at a reference point.
CheckResult info_literal_one_forms();

// Informational: Frobenius distance between the accumulated map and the
// exponential-integral comparator on a near-horizon run.
CheckResult info_comparator_distance();

// The full verify suite in report order.
std::vector<CheckResult> all_checks(double tetrad_perturb = 0.0);

}  // namespace spinfall

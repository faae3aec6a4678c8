#include "spinfall/wigner.hpp"

#include <cmath>
#include <string>

#include "spinfall/errors.hpp"

namespace spinfall {

double scalar_a(double r, double mass) {
    if (!(mass > 0.0)) throw DomainError("mass must be positive");
    if (r < 2.0 * mass) throw DomainError("scalar a requires r >= 2M");
    return std::sqrt(r / (2.0 * mass)) * (1.0 - 2.0 * mass / r) * std::exp(r / (4.0 * mass));
}

double scalar_b(double r, double mass) {
    if (!(mass > 0.0)) throw DomainError("mass must be positive");
    if (r < 2.0 * mass) throw DomainError("scalar b requires r >= 2M");
    const double v = 2.0 * mass / r - 1.0;
    return v * v;
}

SpinorMap step_matrix(const StepInputs& in) {
    if (in.beta == 0.0) throw SingularInputError("step matrix undefined at beta = 0");
    if (in.X == 0.0) throw SingularInputError("step matrix undefined at X = 0");
    if (in.K >= 1.0) throw SingularInputError("step matrix requires K < 1");
    const double coth = 1.0 / std::tanh(in.beta);
    const double kk = in.K * in.K;
    const double denom = 1.0 - kk;
    const double rd = kk * coth * in.b * in.dT / (denom * in.X);
    const double ro = (1.0 + 2.0 * in.K * coth - kk) * in.b * in.dT / (2.0 * denom * in.X);
    double id = 0.0;
    double n2 = 0.0;
    if (in.dtheta != 0.0) {
        if (in.T == 0.0)
            throw SingularInputError("step matrix undefined at T = 0 with dtheta != 0");
        const double xt = 2.0 * denom * in.X * in.T;
        id = (2.0 * in.K * in.X - in.T - kk * (3.0 * in.T + 2.0 * in.X * coth)) * in.a *
             in.dtheta / xt;
        n2 = ((1.0 - 2.0 * in.K * coth + kk) - 4.0 * in.K * in.T) * in.a * in.dtheta / xt;
    }
    SpinorMap D;
    D(0, 0) = cplx(1.0 - rd, id);
    D(0, 1) = cplx(-ro, -0.5 * (in.dphi - n2));
    D(1, 0) = cplx(-ro, -0.5 * (in.dphi + n2));
    D(1, 1) = cplx(1.0 - rd, -id);
    return D;
}

SpinorMap flat_limit_step(double dphi) {
    SpinorMap D = mat2_identity();
    D(0, 1) = cplx(0.0, -0.5 * dphi);
    D(1, 0) = cplx(0.0, -0.5 * dphi);
    return D;
}

namespace {

// Midpoint-evaluated radial quantities for one worldline segment: the
// integrand weight b*u with u = dT/X_mid, coth(beta_mid), and the generator
// coefficients of A_i = c_d I + c_o sigma1 in D = I - A_i + O(A^2).
struct SegmentGenerator {
    double c_d;
    double c_o;
    double b_u;
    double coth;
};

SegmentGenerator segment_generator(const WorldlineSample& s1, const WorldlineSample& s2,
                                   const MomentumState& mom, std::size_t index) {
    const double beta_mid = 0.5 * (s1.beta + s2.beta);
    if (beta_mid == 0.0)
        throw SingularInputError("coth singularity (beta = 0) at worldline segment " +
                                 std::to_string(index));
    const double b_mid = 0.5 * (scalar_b(s1.r, s1.mass) + scalar_b(s2.r, s2.mass));
    const double sp1 = s1.klog.log_prefactor + s1.klog.angle;
    const double sm1 = s1.klog.log_prefactor - s1.klog.angle;
    const double sp2 = s2.klog.log_prefactor + s2.klog.angle;
    const double sm2 = s2.klog.log_prefactor - s2.klog.angle;
    const double m = std::max(std::max(sp1, sm1), std::max(sp2, sm2));
    // u = dT / X_mid, with every exponential shifted by m so the ratio stays
    // representable at any radius.
    const double num = shifted_exp_diff(sp2, sp1, m) - shifted_exp_diff(sm2, sm1, m);
    const double den = std::exp(sp1 - m) + std::exp(sm1 - m) + std::exp(sp2 - m) +
                       std::exp(sm2 - m);
    const double u = 2.0 * num / den;
    const double coth = 1.0 / std::tanh(beta_mid);
    const double kk = mom.K * mom.K;
    const double denom = 1.0 - kk;
    const double b_u = b_mid * u;
    return {kk * coth * b_u / denom,
            (1.0 + 2.0 * mom.K * coth - kk) * b_u / (2.0 * denom), b_u, coth};
}

// exp(-(c_d I + c_o sigma1)) = e^{-c_d}(cosh(c_o) I - sinh(c_o) sigma1),
// assembled in exponent form so a large c_o cannot produce 0 * inf.
SpinorMap segment_exponential(const SegmentGenerator& gen) {
    const double diag = 0.5 * (std::exp(gen.c_o - gen.c_d) + std::exp(-gen.c_o - gen.c_d));
    const double off = -0.5 * (std::exp(gen.c_o - gen.c_d) - std::exp(-gen.c_o - gen.c_d));
    SpinorMap S;
    S(0, 0) = diag;
    S(1, 1) = diag;
    S(0, 1) = off;
    S(1, 0) = off;
    return S;
}

SpinorMap accumulate_ordered(const std::vector<WorldlineSample>& worldline,
                             const MomentumState& mom, bool reversed) {
    if (worldline.empty()) throw DomainError("worldline must be nonempty");
    if (mom.K >= 1.0) throw SingularInputError("accumulation requires K < 1");
    SpinorMap D = mat2_identity();
    for (std::size_t i = 0; i + 1 < worldline.size(); ++i) {
        const SpinorMap S = segment_exponential(
            segment_generator(worldline[i], worldline[i + 1], mom, i));
        D = reversed ? D * S : S * D;
    }
    return D;
}

}  // namespace

std::vector<SpinorMap> segment_factors(const std::vector<WorldlineSample>& worldline,
                                       const MomentumState& mom) {
    if (worldline.empty()) throw DomainError("worldline must be nonempty");
    if (mom.K >= 1.0) throw SingularInputError("segment factors require K < 1");
    std::vector<SpinorMap> out;
    out.reserve(worldline.size() - 1);
    for (std::size_t i = 0; i + 1 < worldline.size(); ++i)
        out.push_back(
            segment_exponential(segment_generator(worldline[i], worldline[i + 1], mom, i)));
    return out;
}

SpinorMap accumulate(const std::vector<WorldlineSample>& worldline, const MomentumState& mom) {
    return accumulate_ordered(worldline, mom, false);
}

SpinorMap accumulate_reversed(const std::vector<WorldlineSample>& worldline,
                              const MomentumState& mom) {
    return accumulate_ordered(worldline, mom, true);
}

SpinorMap closed_form_radial(const std::vector<WorldlineSample>& worldline,
                             const MomentumState& mom) {
    if (worldline.empty()) throw DomainError("worldline must be nonempty");
    if (mom.K >= 1.0) throw SingularInputError("closed form requires K < 1");
    double i1 = 0.0;
    double i2 = 0.0;
    const double kk = mom.K * mom.K;
    for (std::size_t i = 0; i + 1 < worldline.size(); ++i) {
        const SegmentGenerator gen = segment_generator(worldline[i], worldline[i + 1], mom, i);
        // The comparator's off-diagonal integrand carries K coth(beta) where
        // the step matrix carries 2K coth(beta).
        i1 += gen.c_d;
        i2 += (1.0 + mom.K * gen.coth - kk) * gen.b_u / (2.0 * (1.0 - kk));
    }
    SpinorMap D;
    D(0, 0) = std::exp(-i1);
    D(1, 1) = std::exp(-i1);
    D(0, 1) = std::expm1(-i2);
    D(1, 0) = std::expm1(-i2);
    return D;
}

double unitarity_deviation(const SpinorMap& D) {
    SpinorMap dev = dagger(D) * D - mat2_identity();
    return frobenius(dev);
}

bool su2_form_check(const SpinorMap& D, double tol) {
    const double conj_diag = std::abs(D(1, 1) - std::conj(D(0, 0)));
    const double conj_off = std::abs(D(1, 0) + std::conj(D(0, 1)));
    const double norm_dev = std::abs(std::norm(D(0, 0)) + std::norm(D(0, 1)) - 1.0);
    return conj_diag <= tol && conj_off <= tol && norm_dev <= tol;
}

}  // namespace spinfall

#include "spinfall/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spinfall/errors.hpp"

namespace spinfall {

DensityMatrix spin_up_state() {
    DensityMatrix out;
    out.rho(0, 0) = 1.0;
    return out;
}

DensityMatrix apply_map(const DensityMatrix& rho, const SpinorMap& D) {
    DensityMatrix out;
    out.rho = D * rho.rho * dagger(D);
    return out;
}

DensityMatrix spin_up_output(double p, double q) {
    const double s = 1.0 - q;
    DensityMatrix out;
    out.rho(0, 0) = p * p;
    out.rho(0, 1) = -p * s;
    out.rho(1, 0) = -p * s;
    out.rho(1, 1) = s * s;
    return out;
}

ChannelParams extract_pq(const SpinorMap& D) {
    if (!finite(D)) throw DecompositionError("spinor map has non-finite entries");
    ChannelParams out;
    out.p = 0.5 * (D(0, 0).real() + D(1, 1).real());
    const double s = -0.5 * (D(0, 1).real() + D(1, 0).real());
    out.q = 1.0 - s;
    SpinorMap recon = mat2_identity();
    recon(0, 0) = out.p;
    recon(1, 1) = out.p;
    recon(0, 1) = -s;
    recon(1, 0) = -s;
    out.residual = frobenius(D - recon);
    if (out.residual > 1e-6)
        throw DecompositionError("spinor map is not of the radial form p I - (1-q) sigma1");
    return out;
}

namespace {

constexpr double eig_clip = -1e-12;

std::array<double, 2> hermitian_eigenvalues(const DensityMatrix& rho) {
    const double tr = rho.trace();
    const double det = rho.rho(0, 0).real() * rho.rho(1, 1).real() - std::norm(rho.rho(0, 1));
    const double disc = std::max(tr * tr - 4.0 * det, 0.0);
    const double root = std::sqrt(disc);
    return {0.5 * (tr + root), 0.5 * (tr - root)};
}

bool finite_density(const DensityMatrix& rho) { return finite(rho.rho); }

double entropy_term(double lam) {
    if (lam <= 0.0) return 0.0;
    return -lam * std::log2(lam);
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho, bool normalize) {
    if (!finite_density(rho)) return std::numeric_limits<double>::quiet_NaN();
    auto eigs = hermitian_eigenvalues(rho);
    if (normalize) {
        const double tr = rho.trace();
        if (!(tr > 0.0)) throw DomainError("cannot normalize a state with non-positive trace");
        eigs[0] /= tr;
        eigs[1] /= tr;
    }
    double s = 0.0;
    for (double lam : eigs) {
        if (lam < eig_clip) throw DomainError("density matrix has a negative eigenvalue");
        s += entropy_term(std::max(lam, 0.0));
    }
    return s;
}

double purity(const DensityMatrix& rho) {
    if (!finite_density(rho)) return std::numeric_limits<double>::quiet_NaN();
    const double tr = rho.trace();
    if (!(tr > 0.0)) throw DomainError("purity requires a positive trace");
    const auto eigs = hermitian_eigenvalues(rho);
    return (eigs[0] * eigs[0] + eigs[1] * eigs[1]) / (tr * tr);
}

namespace {

using Ptm = Mat4;

std::array<Mat2, 4> pauli_basis() {
    Mat2 s0 = mat2_identity();
    Mat2 s1 = pauli1();
    Mat2 s2;
    s2(0, 1) = cplx(0.0, -1.0);
    s2(1, 0) = cplx(0.0, 1.0);
    Mat2 s3;
    s3(0, 0) = 1.0;
    s3(1, 1) = -1.0;
    return {s0, s1, s2, s3};
}

// R_ab = (1/2) Tr(sigma_a A sigma_b A^dagger), normalized by R_00 so the map
// is compared in trace-preserving form.
Ptm normalized_ptm(double p, double q) {
    const double s = 1.0 - q;
    SpinorMap A = mat2_identity();
    A(0, 0) = p;
    A(1, 1) = p;
    A(0, 1) = -s;
    A(1, 0) = -s;
    const SpinorMap Ad = dagger(A);
    const auto sig = pauli_basis();
    Ptm R{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            R[a][b] = 0.5 * trace(sig[a] * (A * sig[b] * Ad)).real();
    const double r00 = R[0][0];
    if (!(std::abs(r00) > 0.0))
        throw DomainError("channel parameters give an identically vanishing map");
    for (auto& row : R)
        for (double& v : row) v /= r00;
    return R;
}

Ptm bitflip_ptm(double lambda) {
    Ptm B{};
    B[0][0] = B[1][1] = 1.0;
    B[2][2] = B[3][3] = 1.0 - 2.0 * lambda;
    return B;
}

double ptm_distance(const Ptm& R, double lambda) {
    const Ptm B = bitflip_ptm(lambda);
    Ptm diff{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) diff[i][j] = R[i][j] - B[i][j];
    return frobenius4(diff);
}

}  // namespace

BitflipFit bitflip_fit(const ChannelParams& params) {
    const Ptm R = normalized_ptm(params.p, params.q);
    constexpr double scan_step = 1e-4;
    double best_lambda = 0.0;
    double best = ptm_distance(R, 0.0);
    for (int k = 1; k <= 10000; ++k) {
        const double lambda = k * scan_step;
        const double d = ptm_distance(R, lambda);
        if (d < best) {
            best = d;
            best_lambda = lambda;
        }
    }
    // Golden-section refinement inside the winning scan cell.
    double lo = std::max(0.0, best_lambda - scan_step);
    double hi = std::min(1.0, best_lambda + scan_step);
    constexpr double invphi = 0.6180339887498949;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = ptm_distance(R, x1);
    double f2 = ptm_distance(R, x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = ptm_distance(R, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = ptm_distance(R, x2);
        }
    }
    const double lambda = 0.5 * (lo + hi);
    const double d = ptm_distance(R, lambda);
    if (d < best) {
        best = d;
        best_lambda = lambda;
    }
    return {best, best_lambda};
}

double bitflip_distance(const ChannelParams& params) { return bitflip_fit(params).distance; }

ChannelReport channel_report(const SpinorMap& D) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    ChannelReport rep;
    rep.unitarity_dev = unitarity_deviation(D);
    const DensityMatrix out = apply_map(spin_up_state(), D);
    rep.trace_out = out.trace();
    try {
        rep.params = extract_pq(D);
        rep.entropy_paper = von_neumann_entropy(out, false);
        rep.entropy_normalized = von_neumann_entropy(out, true);
        rep.purity = purity(out);
        rep.bitflip_distance = bitflip_distance(rep.params);
    } catch (const DecompositionError&) {
        rep.params = ChannelParams{nan, nan, nan};
        rep.entropy_paper = nan;
        rep.entropy_normalized = nan;
        rep.purity = nan;
        rep.bitflip_distance = nan;
    }
    return rep;
}

}  // namespace spinfall

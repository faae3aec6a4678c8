// Density-matrix transport under accumulated spinor maps: channel parameter
// extraction, von Neumann entropy, purity, and bit-flip-channel similarity.
#pragma once

#include "spinfall/linalg.hpp"
#include "spinfall/wigner.hpp"

namespace spinfall {

// 2x2 Hermitian spin state; the trace is tracked, not assumed 1, because
// non-unitary maps do not preserve it.
struct DensityMatrix {
    Mat2 rho;

    double trace() const { return (rho(0, 0) + rho(1, 1)).real(); }
};

// Scalars of the radial decomposition D = p I - (1-q) sigma1, plus the
// Frobenius residual of that reconstruction.
struct ChannelParams {
    double p = 1.0;
    double q = 1.0;
    double residual = 0.0;
};

struct BitflipFit {
    double distance = 0.0;
    double lambda = 0.0;
};

struct ChannelReport {
    ChannelParams params;
    double entropy_paper = 0.0;       // bits, of the unnormalized output state
    double entropy_normalized = 0.0;  // bits, of the trace-normalized output state
    double purity = 1.0;              // Tr((rho/Tr rho)^2)
    double unitarity_dev = 0.0;
    double trace_out = 1.0;
    double bitflip_distance = 0.0;
};

// Initial spin-up state diag(1, 0).
DensityMatrix spin_up_state();

// rho' = D rho D^dagger.
DensityMatrix apply_map(const DensityMatrix& rho, const SpinorMap& D);

// Literal output state ((p^2, -p(1-q)), (-p(1-q), (1-q)^2)) for spin-up input.
DensityMatrix spin_up_output(double p, double q);

// Averaged decomposition of D into p I - (1-q) sigma1; DecompositionError if
// the residual exceeds 1e-6 or D is not finite.
ChannelParams extract_pq(const SpinorMap& D);

// Base-2 von Neumann entropy; normalize=false acts on the eigenvalues of rho
// as-is.  Returns NaN for non-finite input; DomainError below -1e-12.
double von_neumann_entropy(const DensityMatrix& rho, bool normalize);

// Tr((rho/Tr rho)^2).
double purity(const DensityMatrix& rho);

// Frobenius distance on the Pauli transfer basis between the trace-normalized
// map of D = pI - (1-q)sigma1 and the nearest bit-flip channel
// rho -> (1-lambda) rho + lambda sigma1 rho sigma1, with the minimizing lambda.
BitflipFit bitflip_fit(const ChannelParams& params);
double bitflip_distance(const ChannelParams& params);

// Full diagnostic bundle for an accumulated map acting on the spin-up state.
// Channel columns degrade to NaN when D is not decomposable (e.g. overflowed).
ChannelReport channel_report(const SpinorMap& D);

}  // namespace spinfall

#pragma once

#include "holowave/spectral.hpp"

namespace holowave {

// Smooth dyadic Littlewood-Paley family, pinned for reproducibility:
// the low-pass profile phi equals 1 on |xi| <= 1, 0 on |xi| >= 2, and steps
// down through the C^2 quintic smoothstep in between. Blocks are
// psi_k(xi) = phi(xi/2^k) - phi(xi/2^(k-1)), supported on
// 2^(k-1) <= |xi| <= 2^(k+1) (overlap 2), and telescope so that
// P_{<=0} + sum_{k=1..K} P_k is the identity on grid-resolvable frequencies
// once 2^K exceeds the grid's maximum wavenumber.

// C^2 transition: 0 below t=0, 1 above t=1.
double smoothstep_quintic(double t);

// The low-pass symbol value phi(|xi|).
double lp_low_symbol(double xi);

// Block symbol psi_k(|xi|) for k >= 1.
double lp_block_symbol(double xi, int k);

// Smallest K with phi(xi/2^K) = 1 for every grid wavenumber; the partition
// P_{<=0} + P_1 + .. + P_K then sums to the identity on the grid.
int lp_block_count(const PeriodicGrid& grid);

// k = 0 selects the low-frequency projector P_{<=0}; k >= 1 selects the
// dyadic block P_k.
RealField lp_project(const RealField& u, int k);

// Discrete Besov norm: ||P_{<=0} u||_2 + sum_{k>=1} 2^{ks} ||P_k u||_2,
// for s in {1/2, 3/2}.
double besov_norm(const RealField& u, double s);

}  // namespace holowave

#include "holowave/littlewood_paley.hpp"

#include <cmath>

namespace holowave {

double smoothstep_quintic(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double lp_low_symbol(double xi) {
  const double rho = std::abs(xi);
  if (rho <= 1.0) return 1.0;
  if (rho >= 2.0) return 0.0;
  return 1.0 - smoothstep_quintic(rho - 1.0);
}

double lp_block_symbol(double xi, int k) {
  const double scale = std::ldexp(1.0, -k);  // 2^-k
  return lp_low_symbol(xi * scale) - lp_low_symbol(xi * scale * 2.0);
}

int lp_block_count(const PeriodicGrid& grid) {
  const double xi_max = grid.wavenumber(grid.max_mode());
  int K = 1;
  while (std::ldexp(1.0, K) < xi_max) ++K;
  return K;
}

RealField lp_project(const RealField& u, int k) {
  if (k < 0) throw ParameterError("lp_project: block index must be >= 0");
  if (k == 0)
    return apply_multiplier(
        u, MultiplierSymbol("lp_low", [](double xi) {
          return std::complex<double>(lp_low_symbol(xi), 0.0);
        }));
  return apply_multiplier(
      u, MultiplierSymbol("lp_block", [k](double xi) {
        return std::complex<double>(lp_block_symbol(xi, k), 0.0);
      }));
}

double besov_norm(const RealField& u, double s) {
  if (s != 0.5 && s != 1.5)
    throw ParameterError("besov_norm: only s = 1/2 and s = 3/2 are supported");
  double norm = l2_norm(lp_project(u, 0));
  const int K = lp_block_count(u.grid());
  for (int k = 1; k <= K; ++k)
    norm += std::pow(2.0, s * k) * l2_norm(lp_project(u, k));
  return norm;
}

}  // namespace holowave

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holowave/continuation.hpp"

namespace holowave {

// Falsification harness for pure-capillary solitary waves: Newton on the
// sinh reduction from localized decaying seeds, across a ladder of torus
// lengths. The theorem predicts nothing nontrivial can persist as the torus
// grows.
struct SearchConfig {
  std::vector<double> lengths;       // increasing torus lengths
  int seeds_per_length = 10;
  double points_per_unit = 8.0;      // grid resolution n ~ points_per_unit*L
  double amplitude_min = 0.05;
  double amplitude_max = 0.4;
  double width_min = 1.0;
  double width_max = 4.0;
  unsigned long long rng_seed = 1;
  double collapse_threshold = 1e-8;  // sup|u| below which a run collapsed

  void validate() const;
};

enum class SearchOutcome {
  collapsed_to_zero,
  converged_nonzero,
  diverged,
  stagnated
};

const char* to_string(SearchOutcome o);

struct SearchCell {
  double length = 0.0;
  int seed_index = 0;
  double seed_amplitude = 0.0;
  double seed_width = 0.0;
  SearchOutcome outcome = SearchOutcome::diverged;
  int iterations = 0;
  double final_sup = 0.0;
  double final_residual = 0.0;
  std::size_t grid_n = 0;
  std::vector<double> coeffs;  // final u cosine coefficients
  std::optional<CertificateReport> certificate;
};

struct SearchReport {
  std::vector<double> lengths;
  std::vector<SearchCell> cells;
  // per length: largest sup|u| among converged-nonzero outcomes (0 if none)
  std::vector<double> max_nonzero_amplitude;
  bool amplitude_nonincreasing = true;  // under L-doubling, within 10%
  bool consistent_with_nonexistence = true;
};

SearchReport solitary_search(const WaveParameters& params,
                             const SearchConfig& cfg,
                             const NewtonConfig& ncfg);

}  // namespace holowave

#include "holowave/search.hpp"

#include <cmath>
#include <random>

namespace holowave {

void SearchConfig::validate() const {
  if (lengths.size() < 1) throw ConfigError("search: no torus lengths given");
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i)
    if (!(lengths[i] < lengths[i + 1]))
      throw ConfigError("search: lengths must be strictly increasing");
  if (!(lengths.front() > 0.0)) throw ConfigError("search: lengths must be positive");
  if (seeds_per_length < 1)
    throw ConfigError("search: seeds_per_length must be >= 1");
  if (!(points_per_unit > 0.0))
    throw ConfigError("search: points_per_unit must be positive");
  if (!(amplitude_min > 0.0) || !(amplitude_max >= amplitude_min))
    throw ConfigError("search: bad amplitude range");
  if (!(width_min > 0.0) || !(width_max >= width_min))
    throw ConfigError("search: bad width range");
  if (!(collapse_threshold > 0.0))
    throw ConfigError("search: collapse_threshold must be positive");
}

const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::collapsed_to_zero:
      return "collapsed-to-zero";
    case SearchOutcome::converged_nonzero:
      return "converged-nonzero";
    case SearchOutcome::diverged:
      return "diverged";
    case SearchOutcome::stagnated:
      return "stagnated";
  }
  return "unknown";
}

namespace {

std::size_t grid_points_for(double length, double points_per_unit) {
  auto n = static_cast<std::size_t>(std::ceil(length * points_per_unit));
  if (n % 2 != 0) ++n;
  return std::max<std::size_t>(n, 64);
}

}  // namespace

SearchReport solitary_search(const WaveParameters& params,
                             const SearchConfig& cfg,
                             const NewtonConfig& ncfg) {
  params.validate();
  if (params.g != 0.0)
    throw UsageError("solitary_search: requires g = 0");
  if (!(params.sigma > 0.0))
    throw UsageError("solitary_search: requires sigma > 0");
  cfg.validate();
  ncfg.validate();

  // One seed family, reused across every torus length so amplitudes are
  // comparable under L-doubling.
  std::mt19937_64 rng(cfg.rng_seed);
  std::uniform_real_distribution<double> amp(cfg.amplitude_min,
                                             cfg.amplitude_max);
  std::uniform_real_distribution<double> wid(cfg.width_min, cfg.width_max);
  std::vector<std::pair<double, double>> family;
  for (int i = 0; i < cfg.seeds_per_length; ++i)
    family.emplace_back(amp(rng), wid(rng));

  SearchReport report;
  report.lengths = cfg.lengths;

  for (double L : cfg.lengths) {
    PeriodicGrid grid(grid_points_for(L, cfg.points_per_unit), L);
    double max_amp = 0.0;
    for (int i = 0; i < cfg.seeds_per_length; ++i) {
      const auto [a, w] = family[static_cast<std::size_t>(i)];
      RealField u0 = gaussian_bump(grid, a, w);
      NewtonResult result = newton_solve_sinh(u0, params, ncfg);

      SearchCell cell;
      cell.length = L;
      cell.seed_index = i;
      cell.seed_amplitude = a;
      cell.seed_width = w;
      cell.iterations = result.iterations;
      cell.grid_n = grid.size();
      cell.coeffs = result.coeffs;

      CosineBasis basis(grid, 0);
      RealField u_final = basis.synth(result.coeffs);
      cell.final_sup = sup_norm(u_final);
      cell.final_residual = result.residual_norm;

      switch (result.status) {
        case NewtonStatus::converged:
          cell.outcome = cell.final_sup < cfg.collapse_threshold
                             ? SearchOutcome::collapsed_to_zero
                             : SearchOutcome::converged_nonzero;
          break;
        case NewtonStatus::stagnated:
          cell.outcome = SearchOutcome::stagnated;
          break;
        default:
          cell.outcome = SearchOutcome::diverged;
          break;
      }

      const bool nontrivial = cell.final_sup >= cfg.collapse_threshold;
      if (nontrivial && (cell.outcome == SearchOutcome::converged_nonzero ||
                         cell.outcome == SearchOutcome::stagnated)) {
        cell.certificate = nonexistence_certificate(u_final, params);
      }
      if (cell.outcome == SearchOutcome::converged_nonzero)
        max_amp = std::max(max_amp, cell.final_sup);

      report.cells.push_back(std::move(cell));
    }
    report.max_nonzero_amplitude.push_back(max_amp);
  }

  for (std::size_t i = 0; i + 1 < report.max_nonzero_amplitude.size(); ++i) {
    if (report.max_nonzero_amplitude[i + 1] >
        1.1 * report.max_nonzero_amplitude[i] + 1e-12)
      report.amplitude_nonincreasing = false;
  }
  bool certified = true;
  for (const auto& cell : report.cells) {
    if (cell.outcome == SearchOutcome::converged_nonzero &&
        (!cell.certificate ||
         cell.certificate->verdict != Verdict::inconsistent_with_solution))
      certified = false;
  }
  report.consistent_with_nonexistence =
      report.amplitude_nonincreasing && certified;
  return report;
}

}  // namespace holowave

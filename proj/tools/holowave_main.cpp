// holowave: spectral workbench for steady water waves in holomorphic
// coordinates. Subcommands: selftest | dispersion | solve | continue |
// certify | search. Every run takes a sectioned key=value config file plus
// optional --set section.key=value overrides, and writes its artifacts into
// one output directory (config snapshot, report JSON, data files).
//
// Exit codes: 0 success, 2 config error, 3 degeneracy, 4 convergence
// failure, 5 failed selftest.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "holowave/config.hpp"
#include "holowave/io.hpp"
#include "holowave/selftest.hpp"

namespace fs = std::filesystem;
using namespace holowave;

namespace {

struct CommandArgs {
  std::string config_path;
  std::vector<std::string> overrides;
};

RunConfig load_config(const CommandArgs& args, IniConfig& ini) {
  ini = IniConfig::parse_file(args.config_path);
  for (const auto& spec : args.overrides) ini.apply_override(spec);
  return RunConfig::from_ini(ini);
}

fs::path prepare_output(const RunConfig& cfg, const IniConfig& ini) {
  fs::create_directories(cfg.output_directory);
  write_text_file(cfg.output_directory / "config_snapshot.ini",
                  ini.canonical_text());
  return cfg.output_directory;
}

int exit_code_for(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::config:
      return 2;
    case ErrorCategory::degeneracy:
      return 3;
    case ErrorCategory::convergence:
      return 4;
    case ErrorCategory::internal:
      return 1;
  }
  return 1;
}

int cmd_selftest(const CommandArgs& args) {
  IniConfig ini;
  RunConfig cfg = load_config(args, ini);
  fs::path out = prepare_output(cfg, ini);
  SelftestReport report = run_selftest(cfg.selftest_seed);
  write_text_file(out / "report.json", selftest_report_to_json(report));
  const std::size_t total = report.checks.size();
  std::cout << "selftest: " << (total - report.failed) << "/" << total
            << " checks passed (seed " << report.seed << ")\n";
  if (report.failed > 0) {
    for (const auto& c : report.checks)
      if (!c.pass)
        std::cerr << "  FAILED " << c.name << " defect=" << c.defect
                  << " tol=" << c.tol << "\n";
    return 5;
  }
  return 0;
}

int cmd_dispersion(const CommandArgs& args) {
  IniConfig ini;
  RunConfig cfg = load_config(args, ini);
  if (cfg.dispersion_count < 1 || !(cfg.dispersion_k_min > 0.0) ||
      !(cfg.dispersion_k_max >= cfg.dispersion_k_min))
    throw UsageError("dispersion: empty k-range (set dispersion.k_min, "
                     "k_max, count)");
  fs::path out = prepare_output(cfg, ini);
  std::vector<double> ks, c2s;
  for (int i = 0; i < cfg.dispersion_count; ++i) {
    const double t = cfg.dispersion_count == 1
                         ? 0.0
                         : static_cast<double>(i) /
                               static_cast<double>(cfg.dispersion_count - 1);
    const double k = cfg.dispersion_k_min +
                     t * (cfg.dispersion_k_max - cfg.dispersion_k_min);
    ks.push_back(k);
    c2s.push_back(dispersion_speed(k, cfg.params));
  }
  write_dispersion_csv(ks, c2s, out / "dispersion.csv");
  std::cout << "dispersion: wrote " << ks.size() << " rows to "
            << (out / "dispersion.csv").string() << "\n";
  return 0;
}

struct SeedOutcome {
  ResidualKind kind;
  WaveParameters params;
  NewtonResult result;
  PeriodicGrid grid;
};

SeedOutcome run_solve(const RunConfig& cfg) {
  PeriodicGrid grid(cfg.grid_n, cfg.grid_length);
  const ResidualKind kind = cfg.seed_residual == "sinh" ? ResidualKind::sinh
                                                        : ResidualKind::full;
  WaveParameters params = cfg.params;

  if (cfg.seed_kind == "file") {
    LoadedProfile lp = profile_from_json(read_text_file(cfg.seed_file));
    params = lp.params;
    if (lp.is_log_kind) {
      NewtonResult r = newton_solve_sinh(lp.field(), params, cfg.newton);
      return {ResidualKind::sinh, params, std::move(r), lp.grid()};
    }
    SteadyProfile prof =
        profile_from_re_w_alpha(lp.field(), params.h, cfg.newton.delta);
    NewtonResult r = newton_solve_full(prof, params, cfg.newton);
    return {ResidualKind::full, params, std::move(r), lp.grid()};
  }

  if (kind == ResidualKind::sinh) {
    RealField u0(grid);
    if (cfg.seed_kind == "gaussian") {
      u0 = gaussian_bump(grid, cfg.seed_amplitude, cfg.seed_width);
    } else if (cfg.seed_kind == "dispersion") {
      // the sinh equation's own null speed at wavenumber k
      params.c = std::sqrt(0.5 * params.sigma * cfg.seed_k *
                           std::tanh(params.h * cfg.seed_k));
      u0 = RealField::from_function(grid, [&](double a) {
        return cfg.seed_amplitude * std::cos(cfg.seed_k * a);
      });
    } else {
      throw ConfigError("solve: seed.kind '" + cfg.seed_kind +
                        "' is not usable with the sinh residual");
    }
    NewtonResult r = newton_solve_sinh(u0, params, cfg.newton);
    return {kind, params, std::move(r), grid};
  }

  DispersionSeed seed = [&] {
    if (cfg.seed_kind == "kdv")
      return seed_kdv(cfg.seed_amplitude, params, grid, cfg.newton.delta);
    if (cfg.seed_kind == "dispersion")
      return seed_from_dispersion(cfg.seed_k, cfg.seed_amplitude, params,
                                  grid, cfg.newton.delta);
    // gaussian Re(W_alpha) seed
    RealField re = gaussian_bump(grid, cfg.seed_amplitude, cfg.seed_width);
    return DispersionSeed{
        profile_from_re_w_alpha(re, params.h, cfg.newton.delta), params};
  }();
  NewtonResult r = newton_solve_full(seed.profile, seed.params, cfg.newton);
  return {kind, seed.params, std::move(r), grid};
}

int cmd_solve(const CommandArgs& args) {
  IniConfig ini;
  RunConfig cfg = load_config(args, ini);
  fs::path out = prepare_output(cfg, ini);
  SeedOutcome solved = run_solve(cfg);

  std::cout << "solve: " << to_string(solved.result.status)
            << " after " << solved.result.iterations
            << " iterations, residual " << solved.result.residual_norm
            << "\n";
  if (!solved.result.converged()) return 4;

  BranchPoint pt = make_branch_point(solved.kind, solved.grid, solved.params,
                                     solved.result);
  write_text_file(out / "point.jsonl", branch_point_to_json(pt) + "\n");
  if (solved.kind == ResidualKind::full) {
    SteadyProfile prof = branch_point_profile(pt);
    write_text_file(out / "profile.json",
                    profile_to_json(prof, pt.params));
    write_surface_csv(reconstruct_surface(prof), out / "surface.csv");
  } else {
    write_text_file(out / "profile.json",
                    log_profile_to_json(branch_point_u(pt), pt.params));
  }
  if (pt.certificate)
    write_text_file(out / "certificate.json",
                    certificate_to_json(*pt.certificate) + "\n");
  return 0;
}

int cmd_continue(const CommandArgs& args) {
  IniConfig ini;
  RunConfig cfg = load_config(args, ini);
  fs::path out = prepare_output(cfg, ini);
  SeedOutcome solved = run_solve(cfg);
  if (!solved.result.converged()) {
    std::cout << "continue: seed solve " << to_string(solved.result.status)
              << ", residual " << solved.result.residual_norm << "\n";
    return 4;
  }
  BranchPoint seed_pt = make_branch_point(solved.kind, solved.grid,
                                          solved.params, solved.result);
  Branch branch = continue_branch(seed_pt, cfg.continuation, cfg.newton);
  write_branch_jsonl(branch, out / "branch.jsonl");

  const BranchPoint& last = branch.points.back();
  std::ostringstream summary;
  summary << "continue: " << branch.points.size() << " points, termination "
          << branch.termination << ", final amplitude " << last.amplitude
          << ", overhang " << (last.overhang ? "true" : "false");
  std::cout << summary.str() << "\n";
  if (last.kind == ResidualKind::full) {
    write_surface_csv(reconstruct_surface(branch_point_profile(last)),
                      out / "final_surface.csv");
  }
  return 0;
}

int cmd_certify(const CommandArgs& args) {
  IniConfig ini;
  RunConfig cfg = load_config(args, ini);
  if (cfg.seed_file.empty())
    throw ConfigError("certify: seed.file must point at a stored profile");
  fs::path out = prepare_output(cfg, ini);

  LoadedProfile lp = profile_from_json(read_text_file(cfg.seed_file));
  WaveParameters params = lp.params;
  RealField u = lp.field();
  if (!lp.is_log_kind) {
    // full profile: reduce through the logarithm; the reduction carries the
    // scaled speed c_s^2 = c^2 / 2
    SteadyProfile prof =
        profile_from_re_w_alpha(u, params.h, cfg.newton.delta);
    u = log_reduce(prof).u;
    params.c = params.c / std::sqrt(2.0);
  }
  CertificateReport report =
      nonexistence_certificate(u, params, cfg.certificate);
  write_text_file(out / "report.json", certificate_to_json(report) + "\n");

  if (cfg.scan_radii.size() >= 3) {
    DecayScan scan = decay_scan(u, cfg.scan_radii, params);
    std::ostringstream s;
    s << "{\"exponent\":" << format_double(scan.exponent)
      << ",\"fit_residual\":" << format_double(scan.fit_residual)
      << ",\"all_zero\":" << (scan.all_zero ? "true" : "false") << "}\n";
    write_text_file(out / "decay_scan.json", s.str());
  }

  std::cout << "certify: verdict " << to_string(report.verdict)
            << ", cosh_energy " << report.cosh_energy << ", sech_energy "
            << report.sech_energy << ", residual " << report.residual_norm
            << "\n";
  return 0;
}

int cmd_search(const CommandArgs& args) {
  IniConfig ini;
  RunConfig cfg = load_config(args, ini);
  fs::path out = prepare_output(cfg, ini);
  SearchReport report =
      solitary_search(cfg.params, cfg.search, cfg.newton);
  write_search_artifacts(report, cfg.params, out);

  int collapsed = 0, nonzero = 0;
  for (const auto& cell : report.cells) {
    if (cell.outcome == SearchOutcome::collapsed_to_zero) ++collapsed;
    if (cell.outcome == SearchOutcome::converged_nonzero) ++nonzero;
  }
  std::cout << "search: " << report.cells.size() << " cells, " << collapsed
            << " collapsed, " << nonzero << " converged-nonzero, "
            << "consistent_with_nonexistence "
            << (report.consistent_with_nonexistence ? "true" : "false")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holowave: spectral workbench for steady water waves in "
               "holomorphic coordinates"};
  app.require_subcommand(1);

  std::map<std::string, CommandArgs> cmd_args;
  std::map<std::string, int (*)(const CommandArgs&)> handlers = {
      {"selftest", cmd_selftest}, {"dispersion", cmd_dispersion},
      {"solve", cmd_solve},       {"continue", cmd_continue},
      {"certify", cmd_certify},   {"search", cmd_search},
  };
  const std::map<std::string, std::string> descriptions = {
      {"selftest", "run the operator and identity self-test suite"},
      {"dispersion", "tabulate c^2(k) over a wavenumber range"},
      {"solve", "Newton-solve a single steady profile"},
      {"continue", "trace a solution branch by pseudo-arclength"},
      {"certify", "evaluate the non-existence certificate on a profile"},
      {"search", "falsification search for pure-capillary solitary waves"},
  };
  for (auto& [name, handler] : handlers) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    CommandArgs& args = cmd_args[name];
    sub->add_option("config", args.config_path, "run configuration file")
        ->required();
    sub->add_option("--set", args.overrides,
                    "override a config entry: section.key=value");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return handlers.at(name)(cmd_args.at(name));
  } catch (const Error& e) {
    std::cerr << "holowave " << name << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "holowave " << name << ": " << e.what() << "\n";
    return 1;
  }
}

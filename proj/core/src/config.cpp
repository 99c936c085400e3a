#include "holowave/config.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "holowave/io.hpp"

namespace holowave {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"grid", {"n", "length"}},
      {"params", {"g", "sigma", "h", "c"}},
      {"newton",
       {"max_iters", "abs_tol", "rel_tol", "damping", "linear_solver",
        "iter_cap", "lin_tol", "delta", "fd_eps"}},
      {"continuation",
       {"ds", "ds_min", "ds_max", "max_points", "detect_folds", "max_folds",
        "stop_on_overhang", "target_amplitude", "c_min", "c_max"}},
      {"certificate",
       {"margin", "trivial_threshold", "seam_tol", "cutoff_r", "scan_radii"}},
      {"seed", {"kind", "residual", "k", "amplitude", "width", "file"}},
      {"search",
       {"lengths", "seeds_per_length", "points_per_unit", "amplitude_min",
        "amplitude_max", "width_min", "width_max", "rng_seed",
        "collapse_threshold"}},
      {"dispersion", {"k_min", "k_max", "count"}},
      {"output", {"directory"}},
      {"selftest", {"rng_seed"}},
  };
  return s;
}

void check_known(const std::string& section, const std::string& key) {
  auto it = schema().find(section);
  if (it == schema().end())
    throw ConfigError("config: unknown section [" + section + "]");
  if (!key.empty() && it->second.count(key) == 0)
    throw ConfigError("config: unknown key '" + key + "' in [" + section +
                      "]");
}

double parse_double(const std::string& section, const std::string& key,
                    const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: " + section + "." + key +
                      " is not a number: '" + value + "'");
  }
}

long parse_long(const std::string& section, const std::string& key,
                const std::string& value) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: " + section + "." + key +
                      " is not an integer: '" + value + "'");
  }
}

bool parse_bool(const std::string& section, const std::string& key,
                const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config: " + section + "." + key +
                    " is not a boolean: '" + value + "'");
}

std::vector<double> parse_list(const std::string& section,
                               const std::string& key,
                               const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double(section, key, item));
  }
  return out;
}

struct Reader {
  const IniConfig& ini;
  double num(const std::string& s, const std::string& k, double dflt) const {
    return ini.has(s, k) ? parse_double(s, k, ini.get(s, k)) : dflt;
  }
  long integer(const std::string& s, const std::string& k, long dflt) const {
    return ini.has(s, k) ? parse_long(s, k, ini.get(s, k)) : dflt;
  }
  bool flag(const std::string& s, const std::string& k, bool dflt) const {
    return ini.has(s, k) ? parse_bool(s, k, ini.get(s, k)) : dflt;
  }
  std::string text(const std::string& s, const std::string& k,
                   const std::string& dflt) const {
    return ini.has(s, k) ? ini.get(s, k) : dflt;
  }
  std::vector<double> list(const std::string& s, const std::string& k,
                           std::vector<double> dflt) const {
    return ini.has(s, k) ? parse_list(s, k, ini.get(s, k)) : dflt;
  }
};

}  // namespace

IniConfig IniConfig::parse_string(const std::string& text) {
  IniConfig config;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config: malformed section header at line " +
                          std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      check_known(section, "");
      config.sections_[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos || section.empty())
      throw ConfigError("config: expected key=value under a [section] at "
                        "line " +
                        std::to_string(lineno));
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    check_known(section, key);
    config.sections_[section][key] = value;
  }
  return config;
}

IniConfig IniConfig::parse_file(const std::filesystem::path& path) {
  return parse_string(read_text_file(path));
}

void IniConfig::apply_override(const std::string& spec) {
  const auto eq = spec.find('=');
  const auto dot = spec.find('.');
  if (eq == std::string::npos || dot == std::string::npos || dot > eq)
    throw ConfigError("config: override must look like section.key=value: '" +
                      spec + "'");
  const std::string section = trim(spec.substr(0, dot));
  const std::string key = trim(spec.substr(dot + 1, eq - dot - 1));
  const std::string value = trim(spec.substr(eq + 1));
  check_known(section, key);
  sections_[section][key] = value;
}

bool IniConfig::has(const std::string& section, const std::string& key) const {
  auto it = sections_.find(section);
  return it != sections_.end() && it->second.count(key) > 0;
}

std::string IniConfig::get(const std::string& section,
                           const std::string& key) const {
  auto it = sections_.find(section);
  if (it == sections_.end() || it->second.count(key) == 0)
    throw ConfigError("config: missing " + section + "." + key);
  return it->second.at(key);
}

std::string IniConfig::canonical_text() const {
  std::ostringstream out;
  for (const auto& [section, keys] : sections_) {
    out << "[" << section << "]\n";
    for (const auto& [key, value] : keys) out << key << " = " << value << "\n";
    out << "\n";
  }
  return out.str();
}

RunConfig RunConfig::from_ini(const IniConfig& ini) {
  Reader r{ini};
  RunConfig cfg;

  cfg.grid_n = static_cast<std::size_t>(r.integer("grid", "n", 256));
  cfg.grid_length = r.num("grid", "length", 2.0 * pi);

  cfg.params.g = r.num("params", "g", 0.0);
  cfg.params.sigma = r.num("params", "sigma", 0.0);
  cfg.params.h = r.num("params", "h", 1.0);
  cfg.params.c = r.num("params", "c", 0.0);

  cfg.newton.max_iters = static_cast<int>(r.integer("newton", "max_iters", 30));
  cfg.newton.abs_tol = r.num("newton", "abs_tol", 1e-11);
  cfg.newton.rel_tol = r.num("newton", "rel_tol", 0.0);
  cfg.newton.damping = r.num("newton", "damping", 1.0);
  const std::string solver = r.text("newton", "linear_solver", "automatic");
  if (solver == "dense")
    cfg.newton.linear_solver = LinearSolverKind::dense;
  else if (solver == "iterative")
    cfg.newton.linear_solver = LinearSolverKind::iterative;
  else if (solver == "automatic")
    cfg.newton.linear_solver = LinearSolverKind::automatic;
  else
    throw ConfigError("config: newton.linear_solver must be dense, iterative "
                      "or automatic");
  cfg.newton.iter_cap = static_cast<int>(r.integer("newton", "iter_cap", 500));
  cfg.newton.lin_tol = r.num("newton", "lin_tol", 1e-12);
  cfg.newton.delta = r.num("newton", "delta", 1e-3);
  cfg.newton.fd_eps = r.num("newton", "fd_eps", 1e-6);

  cfg.continuation.ds = r.num("continuation", "ds", 0.02);
  cfg.continuation.ds_min = r.num("continuation", "ds_min", 1e-5);
  cfg.continuation.ds_max = r.num("continuation", "ds_max", 0.2);
  cfg.continuation.max_points =
      static_cast<int>(r.integer("continuation", "max_points", 200));
  cfg.continuation.detect_folds =
      r.flag("continuation", "detect_folds", true);
  cfg.continuation.max_folds =
      static_cast<int>(r.integer("continuation", "max_folds", 16));
  cfg.continuation.stop_on_overhang =
      r.flag("continuation", "stop_on_overhang", false);
  cfg.continuation.target_amplitude =
      r.num("continuation", "target_amplitude", 0.0);
  cfg.continuation.c_min = r.num("continuation", "c_min", 0.0);
  cfg.continuation.c_max = r.num("continuation", "c_max", 0.0);

  cfg.certificate.margin = r.num("certificate", "margin", 10.0);
  cfg.certificate.trivial_threshold =
      r.num("certificate", "trivial_threshold", 1e-8);
  cfg.certificate.seam_tol = r.num("certificate", "seam_tol", 1e-6);
  cfg.cutoff_r = r.num("certificate", "cutoff_r", 0.0);
  cfg.scan_radii = r.list("certificate", "scan_radii", {});

  cfg.seed_kind = r.text("seed", "kind", "dispersion");
  cfg.seed_residual = r.text("seed", "residual", "full");
  cfg.seed_k = r.num("seed", "k", 1.0);
  cfg.seed_amplitude = r.num("seed", "amplitude", 1e-3);
  cfg.seed_width = r.num("seed", "width", 1.0);
  cfg.seed_file = r.text("seed", "file", "");

  cfg.search.lengths = r.list("search", "lengths", {64.0, 128.0, 256.0});
  cfg.search.seeds_per_length =
      static_cast<int>(r.integer("search", "seeds_per_length", 10));
  cfg.search.points_per_unit = r.num("search", "points_per_unit", 8.0);
  cfg.search.amplitude_min = r.num("search", "amplitude_min", 0.05);
  cfg.search.amplitude_max = r.num("search", "amplitude_max", 0.4);
  cfg.search.width_min = r.num("search", "width_min", 1.0);
  cfg.search.width_max = r.num("search", "width_max", 4.0);
  cfg.search.rng_seed = static_cast<unsigned long long>(
      r.integer("search", "rng_seed", 1));
  cfg.search.collapse_threshold =
      r.num("search", "collapse_threshold", 1e-8);

  cfg.dispersion_k_min = r.num("dispersion", "k_min", 0.0);
  cfg.dispersion_k_max = r.num("dispersion", "k_max", 0.0);
  cfg.dispersion_count =
      static_cast<int>(r.integer("dispersion", "count", 0));

  cfg.output_directory = r.text("output", "directory", "out");
  cfg.selftest_seed = static_cast<unsigned long long>(
      r.integer("selftest", "rng_seed", 1));

  cfg.validate();
  return cfg;
}

void RunConfig::validate() const {
  PeriodicGrid grid(grid_n, grid_length);  // checks evenness and positivity
  params.validate();
  newton.validate();
  continuation.validate();
  search.validate();
  if (!(certificate.margin > 0.0))
    throw ConfigError("config: certificate.margin must be positive");
  if (!(certificate.trivial_threshold > 0.0))
    throw ConfigError("config: certificate.trivial_threshold must be positive");
  if (!(certificate.seam_tol > 0.0))
    throw ConfigError("config: certificate.seam_tol must be positive");
  if (cutoff_r < 0.0 || cutoff_r > grid.length() / 8.0)
    throw ConfigError("config: certificate.cutoff_r must lie in [0, L/8]");
  if (seed_kind != "dispersion" && seed_kind != "gaussian" &&
      seed_kind != "kdv" && seed_kind != "file")
    throw ConfigError("config: seed.kind must be dispersion, gaussian, kdv "
                      "or file");
  if (seed_residual != "full" && seed_residual != "sinh")
    throw ConfigError("config: seed.residual must be full or sinh");
  if (dispersion_count < 0)
    throw ConfigError("config: dispersion.count must be >= 0");
}

}  // namespace holowave

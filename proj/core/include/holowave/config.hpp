#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "holowave/search.hpp"

namespace holowave {

// Flat sectioned key=value configuration (INI-style): '#' and ';' start
// comments, keys live under a [section]. Unknown sections or keys are
// rejected against the workbench schema before anything runs.
class IniConfig {
 public:
  static IniConfig parse_string(const std::string& text);
  static IniConfig parse_file(const std::filesystem::path& path);

  // "section.key=value" override, as given on the command line.
  void apply_override(const std::string& spec);

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key) const;
  const std::map<std::string, std::map<std::string, std::string>>& sections()
      const {
    return sections_;
  }

  // Canonical snapshot: sorted sections and keys, one key=value per line.
  std::string canonical_text() const;

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

// Typed run configuration shared by the CLI commands. Every invariant of the
// referenced domain types is checked up front; computation starts only on a
// fully validated config.
struct RunConfig {
  std::size_t grid_n = 256;
  double grid_length = 2.0 * pi;
  WaveParameters params;
  NewtonConfig newton;
  ContinuationConfig continuation;
  CertificateOptions certificate;
  double cutoff_r = 0.0;  // 0: default to L/8
  std::vector<double> scan_radii;

  // seed block
  std::string seed_kind = "dispersion";  // dispersion | gaussian | kdv | file
  std::string seed_residual = "full";    // full | sinh
  double seed_k = 1.0;
  double seed_amplitude = 1e-3;
  double seed_width = 1.0;
  std::string seed_file;

  SearchConfig search;

  double dispersion_k_min = 0.0;
  double dispersion_k_max = 0.0;
  int dispersion_count = 0;

  std::filesystem::path output_directory = "out";
  unsigned long long selftest_seed = 1;

  static RunConfig from_ini(const IniConfig& ini);
  void validate() const;
};

}  // namespace holowave

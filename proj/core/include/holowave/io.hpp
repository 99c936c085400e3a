#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "holowave/search.hpp"

namespace holowave {

// Shortest round-trip decimal representation, used for every floating-point
// value written to CSV so artifacts are byte-stable across runs.
std::string format_double(double x);

// Profile files:
//   {"params":{"g":..,"sigma":..,"h":..,"c":..},
//    "grid":{"n":..,"L":..},
//    "re_w_alpha_coeffs":[re c_{-n/2+1}, im c_{-n/2+1}, ...]}
// with the spectrum of Re(W_alpha) interleaved in ascending wavenumber
// order. Log-kind profiles carry "u_coeffs" instead.
std::string profile_to_json(const SteadyProfile& profile,
                            const WaveParameters& params);
std::string log_profile_to_json(const RealField& u,
                                const WaveParameters& params);

struct LoadedProfile {
  bool is_log_kind = false;
  WaveParameters params;
  std::vector<double> field_samples;  // Re(W_alpha) or u
  std::size_t grid_n = 0;
  double grid_length = 0.0;

  PeriodicGrid grid() const { return PeriodicGrid(grid_n, grid_length); }
  RealField field() const { return RealField(grid(), field_samples); }
};
LoadedProfile profile_from_json(const std::string& text);

std::string certificate_to_json(const CertificateReport& report);

// Branch and search artifacts are JSONL: one self-contained JSON object per
// line, embedding the profile in the format above.
std::string branch_point_to_json(const BranchPoint& pt);
BranchPoint branch_point_from_json(const std::string& line);
void write_branch_jsonl(const Branch& branch,
                        const std::filesystem::path& path);
std::vector<BranchPoint> read_branch_jsonl(const std::filesystem::path& path);

std::string search_cell_to_json(const SearchCell& cell,
                                const WaveParameters& params);
std::string search_report_to_json(const SearchReport& report);
void write_search_artifacts(const SearchReport& report,
                            const WaveParameters& params,
                            const std::filesystem::path& directory);

// CSV: comma separated, dot decimal, fixed header row.
void write_surface_csv(const SurfaceReconstruction& surface,
                       const std::filesystem::path& path);
void write_dispersion_csv(const std::vector<double>& k,
                          const std::vector<double>& c2,
                          const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path,
                     const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace holowave

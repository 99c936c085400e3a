#include "holowave/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace holowave {

using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

namespace {

json params_to_json(const WaveParameters& p) {
  return json{{"g", p.g}, {"sigma", p.sigma}, {"h", p.h}, {"c", p.c}};
}

WaveParameters params_from_json(const json& j) {
  WaveParameters p;
  p.g = j.at("g").get<double>();
  p.sigma = j.at("sigma").get<double>();
  p.h = j.at("h").get<double>();
  p.c = j.at("c").get<double>();
  return p;
}

json spectrum_to_json(const RealField& u) {
  SpectralField c = to_spectral(u);
  const long nyq = u.grid().max_mode();
  json arr = json::array();
  for (long m = -nyq + 1; m <= nyq; ++m) {
    arr.push_back(c.coeff(m).real());
    arr.push_back(c.coeff(m).imag());
  }
  return arr;
}

RealField spectrum_from_json(const json& arr, const PeriodicGrid& grid) {
  if (arr.size() != 2 * grid.size())
    throw ConfigError("profile: coefficient count does not match grid");
  SpectralField c(grid);
  const long nyq = grid.max_mode();
  std::size_t i = 0;
  for (long m = -nyq + 1; m <= nyq; ++m) {
    const double re = arr.at(i++).get<double>();
    const double im = arr.at(i++).get<double>();
    c.coeff(m) = {re, im};
  }
  return to_real(c);
}

json field_profile_json(const RealField& field, const WaveParameters& params,
                        const char* coeff_key) {
  const PeriodicGrid& g = field.grid();
  json j;
  j["params"] = params_to_json(params);
  j["grid"] = json{{"n", g.size()}, {"L", g.length()}};
  j[coeff_key] = spectrum_to_json(field);
  return j;
}

LoadedProfile loaded_from_json(const json& j) {
  LoadedProfile out;
  out.params = params_from_json(j.at("params"));
  out.grid_n = j.at("grid").at("n").get<std::size_t>();
  out.grid_length = j.at("grid").at("L").get<double>();
  PeriodicGrid grid(out.grid_n, out.grid_length);
  if (j.contains("re_w_alpha_coeffs")) {
    out.is_log_kind = false;
    out.field_samples =
        spectrum_from_json(j.at("re_w_alpha_coeffs"), grid).samples();
  } else if (j.contains("u_coeffs")) {
    out.is_log_kind = true;
    out.field_samples = spectrum_from_json(j.at("u_coeffs"), grid).samples();
  } else {
    throw ConfigError("profile: no re_w_alpha_coeffs or u_coeffs entry");
  }
  return out;
}

json certificate_json(const CertificateReport& r) {
  return json{{"cosh_energy", r.cosh_energy}, {"sech_energy", r.sech_energy},
              {"residual_norm", r.residual_norm}, {"b32_norm", r.b32_norm},
              {"verdict", to_string(r.verdict)},
              {"energy_bound", r.energy_bound}, {"seam_ok", r.seam_ok}};
}

CertificateReport certificate_from_json(const json& j) {
  CertificateReport r;
  r.cosh_energy = j.at("cosh_energy").get<double>();
  r.sech_energy = j.at("sech_energy").get<double>();
  r.residual_norm = j.at("residual_norm").get<double>();
  r.b32_norm = j.at("b32_norm").get<double>();
  r.energy_bound = j.at("energy_bound").get<double>();
  r.seam_ok = j.at("seam_ok").get<bool>();
  const std::string v = j.at("verdict").get<std::string>();
  r.verdict = v == "trivial" ? Verdict::trivial
              : v == "inconsistent-with-solution"
                  ? Verdict::inconsistent_with_solution
                  : Verdict::inconclusive;
  return r;
}

}  // namespace

std::string profile_to_json(const SteadyProfile& profile,
                            const WaveParameters& params) {
  return field_profile_json(profile.w_alpha().re(), params,
                            "re_w_alpha_coeffs")
      .dump();
}

std::string log_profile_to_json(const RealField& u,
                                const WaveParameters& params) {
  return field_profile_json(u, params, "u_coeffs").dump();
}

LoadedProfile profile_from_json(const std::string& text) {
  return loaded_from_json(json::parse(text));
}

std::string certificate_to_json(const CertificateReport& report) {
  return certificate_json(report).dump();
}

std::string branch_point_to_json(const BranchPoint& pt) {
  json j;
  if (pt.kind == ResidualKind::full) {
    CosineBasis basis(pt.grid(), 1);
    j["profile"] = field_profile_json(basis.synth(pt.coeffs), pt.params,
                                      "re_w_alpha_coeffs");
  } else {
    CosineBasis basis(pt.grid(), 0);
    j["profile"] =
        field_profile_json(basis.synth(pt.coeffs), pt.params, "u_coeffs");
  }
  j["kind"] = to_string(pt.kind);
  j["bernoulli"] = pt.bernoulli;
  j["residual_norm"] = pt.residual_norm;
  j["amplitude"] = pt.amplitude;
  j["overhang"] = pt.overhang;
  j["arclength"] = pt.arclength;
  j["certificate"] =
      pt.certificate ? certificate_json(*pt.certificate) : json(nullptr);
  return j.dump();
}

BranchPoint branch_point_from_json(const std::string& line) {
  json j = json::parse(line);
  LoadedProfile lp = loaded_from_json(j.at("profile"));
  BranchPoint pt;
  pt.kind = j.at("kind").get<std::string>() == "full" ? ResidualKind::full
                                                      : ResidualKind::sinh;
  pt.params = lp.params;
  pt.grid_n = lp.grid_n;
  pt.grid_length = lp.grid_length;
  CosineBasis basis(lp.grid(), pt.kind == ResidualKind::full ? 1 : 0);
  pt.coeffs = basis.analyze(lp.field());
  pt.bernoulli = j.at("bernoulli").get<double>();
  pt.residual_norm = j.at("residual_norm").get<double>();
  pt.amplitude = j.at("amplitude").get<double>();
  pt.overhang = j.at("overhang").get<bool>();
  pt.arclength = j.at("arclength").get<double>();
  if (!j.at("certificate").is_null())
    pt.certificate = certificate_from_json(j.at("certificate"));
  return pt;
}

void write_branch_jsonl(const Branch& branch,
                        const std::filesystem::path& path) {
  std::ostringstream out;
  for (const auto& pt : branch.points) out << branch_point_to_json(pt) << "\n";
  write_text_file(path, out.str());
}

std::vector<BranchPoint> read_branch_jsonl(
    const std::filesystem::path& path) {
  std::vector<BranchPoint> points;
  std::istringstream in(read_text_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    points.push_back(branch_point_from_json(line));
  }
  return points;
}

std::string search_cell_to_json(const SearchCell& cell,
                                const WaveParameters& params) {
  json j;
  j["length"] = cell.length;
  j["seed_index"] = cell.seed_index;
  j["seed_amplitude"] = cell.seed_amplitude;
  j["seed_width"] = cell.seed_width;
  j["outcome"] = to_string(cell.outcome);
  j["iterations"] = cell.iterations;
  j["final_sup"] = cell.final_sup;
  j["final_residual"] = cell.final_residual;
  PeriodicGrid grid(cell.grid_n, cell.length);
  CosineBasis basis(grid, 0);
  j["profile"] = field_profile_json(basis.synth(cell.coeffs), params,
                                    "u_coeffs");
  j["certificate"] =
      cell.certificate ? certificate_json(*cell.certificate) : json(nullptr);
  return j.dump();
}

std::string search_report_to_json(const SearchReport& report) {
  json counts = json::object();
  for (const auto& cell : report.cells) {
    const std::string key = to_string(cell.outcome);
    counts[key] = counts.value(key, 0) + 1;
  }
  json j;
  j["lengths"] = report.lengths;
  j["cells_total"] = report.cells.size();
  j["outcome_counts"] = counts;
  j["max_nonzero_amplitude"] = report.max_nonzero_amplitude;
  j["amplitude_nonincreasing"] = report.amplitude_nonincreasing;
  j["consistent_with_nonexistence"] = report.consistent_with_nonexistence;
  return j.dump(2) + "\n";
}

void write_search_artifacts(const SearchReport& report,
                            const WaveParameters& params,
                            const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  write_text_file(directory / "search_report.json",
                  search_report_to_json(report));
  std::ostringstream cells;
  for (const auto& cell : report.cells)
    cells << search_cell_to_json(cell, params) << "\n";
  write_text_file(directory / "search_cells.jsonl", cells.str());
}

void write_surface_csv(const SurfaceReconstruction& surface,
                       const std::filesystem::path& path) {
  std::ostringstream out;
  out << "alpha,re_z,im_z\n";
  for (std::size_t j = 0; j < surface.z.size(); ++j)
    out << format_double(surface.alpha[j]) << ","
        << format_double(surface.z[j].real()) << ","
        << format_double(surface.z[j].imag()) << "\n";
  write_text_file(path, out.str());
}

void write_dispersion_csv(const std::vector<double>& k,
                          const std::vector<double>& c2,
                          const std::filesystem::path& path) {
  std::ostringstream out;
  out << "k,c2\n";
  for (std::size_t i = 0; i < k.size(); ++i)
    out << format_double(k[i]) << "," << format_double(c2[i]) << "\n";
  write_text_file(path, out.str());
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCategory::internal,
                        "cannot open for writing: " + path.string());
  out << text;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ConfigError("cannot open for reading: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace holowave

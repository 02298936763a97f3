#include "lowreg/harness/outputs.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <system_error>

#include <json.hpp>

#include "lowreg/error.hpp"

namespace lowreg::harness {

namespace {

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    out.close();
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot move output into place: " + path.string());
  }
}

}  // namespace

const char* software_version() { return LOWREG_NLS_VERSION; }

std::string format_csv(const analysis::ErrorTable& table) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : table.rows) {
    out += std::string(integrators::to_string(r.scheme)) + "," + g17(r.tau) + "," +
           std::to_string(r.n_steps) + "," + g17(r.error) + "," + g17(r.norm_r) + "," +
           (r.failed ? "1" : "0") + "\n";
  }
  return out;
}

std::string format_manifest(const analysis::ErrorTable& table, const StudyConfig& config) {
  using nlohmann::ordered_json;
  ordered_json m;
  m["software"] = "lowreg-nls";
  m["version"] = software_version();
  m["name"] = config.name;
  m["seed"] = config.initial.seed;
  m["config"] = to_config_text(config);
  m["rounding_convention"] = kRoundingConvention;
  m["reference_step"] = config.reference == ReferenceKind::Exact ? 0.0 : config.reference_step();

  ordered_json slopes = ordered_json::object();
  for (const auto& [kind, slope] : table.fitted_slopes) {
    slopes[std::string(integrators::to_string(kind))] =
        slope ? ordered_json(*slope) : ordered_json(nullptr);
  }
  m["fitted_slopes"] = slopes;

  ordered_json rows = ordered_json::array();
  double total = 0.0;
  for (const auto& r : table.rows) {
    ordered_json row;
    row["scheme"] = integrators::to_string(r.scheme);
    row["tau"] = r.tau;
    row["n_steps"] = r.n_steps;
    row["t"] = r.t;
    row["error"] = std::isfinite(r.error) ? ordered_json(r.error) : ordered_json(nullptr);
    row["failed"] = r.failed;
    row["below_floor"] = r.below_floor;
    if (r.failed) row["failure"] = r.failure;
    row["wall_seconds"] = r.wall_seconds;
    total += r.wall_seconds;
    rows.push_back(std::move(row));
  }
  m["row_count"] = table.rows.size();
  m["rows"] = std::move(rows);
  m["total_row_wall_seconds"] = total;
  return m.dump(2) + "\n";
}

std::string format_plot_data(const analysis::ErrorTable& table, integrators::SchemeKind kind) {
  std::string out = "# log10(tau) log10(error) " + std::string(integrators::to_string(kind)) + "\n";
  for (const auto* r : table.rows_for(kind)) {
    if (r->failed || !(r->error > 0.0)) continue;
    out += g17(std::log10(r->tau)) + " " + g17(std::log10(r->error)) + "\n";
  }
  return out;
}

std::vector<std::filesystem::path> emit_outputs(const analysis::ErrorTable& table,
                                                const StudyConfig& config) {
  const auto& dir = config.output_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw Error("cannot create output directory " + dir.string());
  }
  std::vector<std::filesystem::path> written;
  auto put = [&](const std::filesystem::path& name, const std::string& content) {
    write_atomically(dir / name, content);
    written.push_back(dir / name);
  };
  if (config.write_csv) put("results.csv", format_csv(table));
  if (config.write_json) put("manifest.json", format_manifest(table, config));
  if (config.write_plot_data) {
    std::set<integrators::SchemeKind> kinds;
    for (const auto& r : table.rows) kinds.insert(r.scheme);
    for (auto kind : kinds) {
      put("plot_" + std::string(integrators::to_string(kind)) + ".dat",
          format_plot_data(table, kind));
    }
  }
  return written;
}

}  // namespace lowreg::harness

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lowreg/analysis/convergence.hpp"
#include "lowreg/harness/config.hpp"

namespace lowreg::harness {

inline constexpr const char* kCsvHeader = "scheme,tau,n_steps,error,norm_r,failed";
inline constexpr const char* kRoundingConvention =
    "n_steps = round(T / tau); each row is compared with the reference at t = n_steps * tau";

/// Table as CSV text: header line, then one line per row in table order.
/// Floats use %.17g, lines end in LF, `failed` is 0 or 1.
std::string format_csv(const analysis::ErrorTable& table);

/// JSON manifest: config echo, seed, fitted slopes, per-row t / floor flags /
/// failure messages / wall times, rounding convention and software version.
std::string format_manifest(const analysis::ErrorTable& table, const StudyConfig& config);

/// "log10(tau) log10(error)" per usable row of one scheme.
std::string format_plot_data(const analysis::ErrorTable& table, integrators::SchemeKind kind);

/// Writes the enabled outputs into config.output_dir (created if missing):
/// results.csv, manifest.json and plot_<Scheme>.dat. Each file is written to
/// a temporary name and renamed into place. Returns the written paths.
/// Throws lowreg::Error if the directory cannot be written.
std::vector<std::filesystem::path> emit_outputs(const analysis::ErrorTable& table,
                                                const StudyConfig& config);

/// Software version compiled into the library.
const char* software_version();

}  // namespace lowreg::harness

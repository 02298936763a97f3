#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lowreg/analysis/convergence.hpp"
#include "lowreg/analysis/reference.hpp"
#include "lowreg/integrators/scheme.hpp"

namespace lowreg::harness {

using integrators::Equation;
using integrators::SchemeKind;

enum class InitialKind { Rough, RawRand, SinCos, Sin, PlaneWave };

struct InitialSpec {
  InitialKind kind = InitialKind::Rough;
  double theta = 0.0;        ///< Rough only
  std::uint64_t seed = 1;    ///< Rough and RawRand
  bool normalize = true;     ///< Rough and RawRand
  int wave_number = 1;       ///< PlaneWave only
  double amplitude = 1.0;    ///< PlaneWave only (real amplitude)
};

enum class LadderKind {
  Paper,     ///< tau = j / denominator, j = 1..denominator
  Dyadic,    ///< tau = 2^-e, e = min_exp..max_exp
  Explicit,  ///< listed values
};

struct TauLadder {
  LadderKind kind = LadderKind::Dyadic;
  int denominator = 512;
  int min_exp = 4;
  int max_exp = 10;
  std::vector<double> values;

  /// Step sizes in decreasing order.
  std::vector<double> taus() const;
};

enum class ReferenceKind {
  SelfRefined,
  StrangRefined,
  Exact,  ///< closed-form plane-wave solution (power_nls + plane_wave only)
};

/// Full description of one convergence experiment.
struct StudyConfig {
  std::string name = "study";

  Equation equation = Equation::PowerNls;
  double p = 1.0;
  double mu = 1.0;
  bool quad_zero_mode_fix = true;
  bool allow_noninteger_p = false;

  int dimension = 1;
  int K = 256;

  InitialSpec initial;
  std::vector<SchemeKind> schemes;

  double T = 1.0;
  TauLadder ladder;
  double error_norm_r = 1.0;

  ReferenceKind reference = ReferenceKind::SelfRefined;
  double tau_ref = 0.0;  ///< 0 selects analysis::default_reference_step(T)

  analysis::SlopeWindow window;

  std::filesystem::path output_dir = "results";
  bool write_csv = true;
  bool write_json = true;
  bool write_plot_data = true;

  int workers = 1;

  /// Scheme parameters for `kind` at step size tau.
  integrators::SchemeSpec scheme_spec(SchemeKind kind, double tau) const;
  /// Effective reference step.
  double reference_step() const;
  /// Throws ConfigError describing the first violated constraint.
  void validate() const;
};

/// Parses the sectioned key = value format (see README for the grammar).
/// Throws ConfigError on syntax errors, unknown keys or invalid values.
StudyConfig parse_config(const std::string& text);
StudyConfig load_config(const std::filesystem::path& path);

/// Serializes a config in the same format; parse_config(to_config_text(c))
/// reproduces c.
std::string to_config_text(const StudyConfig& config);

std::string_view to_string(InitialKind kind);
std::string_view to_string(LadderKind kind);
std::string_view to_string(ReferenceKind kind);

}  // namespace lowreg::harness

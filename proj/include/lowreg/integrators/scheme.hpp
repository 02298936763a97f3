#pragma once

#include <optional>
#include <string_view>

namespace lowreg::integrators {

/// Time-stepping schemes.
enum class SchemeKind {
  LowRegExp,     ///< low-regularity exponential-type integrator, power nonlinearity
  ClassicalExp,  ///< classical first-order exponential integrator
  LieSplit,      ///< Lie splitting, power nonlinearity
  StrangSplit,   ///< Strang splitting, power nonlinearity
  QuadU2,        ///< low-regularity integrator for mu u^2
  QuadAbsU2,     ///< low-regularity integrator for mu |u|^2
  LieQuad,       ///< Lie splitting for mu u^2
  StrangQuad,    ///< Strang splitting for mu u^2
};

/// Right-hand side nonlinearity N(u) in  i u_t = -Laplacian u + N(u).
enum class Equation {
  PowerNls,  ///< mu |u|^{2p} u
  QuadU2,    ///< mu u^2 (d = 1)
  QuadAbs2,  ///< mu |u|^2 (d = 1)
};

std::string_view to_string(SchemeKind kind);
std::optional<SchemeKind> parse_scheme_kind(std::string_view name);
std::string_view to_string(Equation eq);
std::optional<Equation> parse_equation(std::string_view name);

/// The equation a scheme kind is built for; ClassicalExp works for all three
/// and reports PowerNls here.
Equation native_equation(SchemeKind kind);

/// Which integrator to run and with which parameters.
struct SchemeSpec {
  SchemeKind kind = SchemeKind::LowRegExp;
  Equation equation = Equation::PowerNls;
  double mu = 1.0;
  double p = 1.0;
  double tau = 0.0;
  /// QuadAbsU2 only: add +i mu tau |c_0|^2 so the (0,0) mode pair is counted
  /// once. false reproduces the formula without the correction.
  bool quad_zero_mode_fix = true;
  /// Accept non-integer p for LowRegExp (principal-branch powers).
  bool allow_noninteger_p = false;

  /// Convenience constructor that picks the scheme's native equation.
  static SchemeSpec make(SchemeKind kind, double mu, double tau, double p = 1.0);

  /// Checks every invariant against a grid of dimension `grid_dim`,
  /// including tau > 0. Throws ConfigError.
  void validate(int grid_dim) const;

  /// Same checks except that tau may be any finite non-zero value
  /// (used for backward steps).
  void validate_structure(int grid_dim) const;
};

}  // namespace lowreg::integrators

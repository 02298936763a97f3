#include "lowreg/integrators/scheme.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "lowreg/error.hpp"

namespace lowreg::integrators {

namespace {

constexpr std::array<std::pair<SchemeKind, std::string_view>, 8> kSchemeNames{{
    {SchemeKind::LowRegExp, "LowRegExp"},
    {SchemeKind::ClassicalExp, "ClassicalExp"},
    {SchemeKind::LieSplit, "LieSplit"},
    {SchemeKind::StrangSplit, "StrangSplit"},
    {SchemeKind::QuadU2, "QuadU2"},
    {SchemeKind::QuadAbsU2, "QuadAbsU2"},
    {SchemeKind::LieQuad, "LieQuad"},
    {SchemeKind::StrangQuad, "StrangQuad"},
}};

constexpr std::array<std::pair<Equation, std::string_view>, 3> kEquationNames{{
    {Equation::PowerNls, "power_nls"},
    {Equation::QuadU2, "quad_u2"},
    {Equation::QuadAbs2, "quad_abs2"},
}};

bool is_integer(double x) { return std::floor(x) == x; }

}  // namespace

std::string_view to_string(SchemeKind kind) {
  for (const auto& [k, name] : kSchemeNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<SchemeKind> parse_scheme_kind(std::string_view name) {
  for (const auto& [k, n] : kSchemeNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Equation eq) {
  for (const auto& [e, name] : kEquationNames) {
    if (e == eq) return name;
  }
  return "unknown";
}

std::optional<Equation> parse_equation(std::string_view name) {
  for (const auto& [e, n] : kEquationNames) {
    if (n == name) return e;
  }
  return std::nullopt;
}

Equation native_equation(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::QuadU2:
    case SchemeKind::LieQuad:
    case SchemeKind::StrangQuad:
      return Equation::QuadU2;
    case SchemeKind::QuadAbsU2:
      return Equation::QuadAbs2;
    default:
      return Equation::PowerNls;
  }
}

SchemeSpec SchemeSpec::make(SchemeKind kind, double mu, double tau, double p) {
  SchemeSpec s;
  s.kind = kind;
  s.equation = native_equation(kind);
  s.mu = mu;
  s.tau = tau;
  s.p = p;
  return s;
}

void SchemeSpec::validate_structure(int grid_dim) const {
  const std::string name(to_string(kind));
  if (!std::isfinite(tau) || tau == 0.0) throw ConfigError(name + ": tau must be finite and non-zero");
  if (!std::isfinite(mu)) throw ConfigError(name + ": mu must be finite");
  if (kind != SchemeKind::ClassicalExp && native_equation(kind) != equation) {
    throw ConfigError(name + " cannot integrate equation " + std::string(to_string(equation)));
  }
  if (equation != Equation::PowerNls && grid_dim != 1) {
    throw ConfigError(name + ": quadratic equations are defined for dimension 1 only");
  }
  if (equation == Equation::PowerNls) {
    if (!std::isfinite(p) || p <= 0.0) throw ConfigError(name + ": p must be positive");
    if (kind == SchemeKind::LowRegExp && !is_integer(p) && !allow_noninteger_p) {
      throw ConfigError(name + ": non-integer p = " + std::to_string(p) +
                        " requires allow_noninteger_p");
    }
  }
}

void SchemeSpec::validate(int grid_dim) const {
  validate_structure(grid_dim);
  if (!(tau > 0.0)) throw ConfigError(std::string(to_string(kind)) + ": tau must be positive");
}

}  // namespace lowreg::integrators

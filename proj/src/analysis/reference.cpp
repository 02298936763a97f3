#include "lowreg/analysis/reference.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lowreg/error.hpp"
#include "lowreg/integrators/stepper.hpp"

namespace lowreg::analysis {

using integrators::Equation;
using integrators::SchemeKind;

double default_reference_step(double T) {
  if (!(T > 0.0)) throw ConfigError("final time must be positive");
  return std::ldexp(1.0, static_cast<int>(std::ceil(std::log2(T))) - 16);
}

std::optional<long> steps_to_reach(double t, double tau_ref) {
  const double ratio = t / tau_ref;
  const double n = std::nearbyint(ratio);
  if (std::abs(n * tau_ref - t) > 1e-12 * std::max(1.0, std::abs(t))) return std::nullopt;
  return static_cast<long>(n);
}

SchemeSpec reference_scheme(const SchemeSpec& equation, ReferencePolicy policy, double tau_ref) {
  SchemeSpec s = equation;
  s.tau = tau_ref;
  if (policy == ReferencePolicy::StrangRefined) {
    switch (equation.equation) {
      case Equation::PowerNls:
        s.kind = SchemeKind::StrangSplit;
        break;
      case Equation::QuadU2:
        s.kind = SchemeKind::StrangQuad;
        break;
      case Equation::QuadAbs2:
        throw ConfigError("no Strang splitting available for quad_abs2; use SelfRefined");
    }
  }
  return s;
}

Field reference_solution(const Field& u0, const SchemeSpec& equation, double T,
                         ReferencePolicy policy, double tau_ref) {
  if (tau_ref == 0.0) tau_ref = default_reference_step(T);
  const auto n = steps_to_reach(T, tau_ref);
  if (!n) {
    throw ConfigError("reference step " + std::to_string(tau_ref) + " does not divide T = " +
                      std::to_string(T));
  }
  return integrators::evolve(u0, reference_scheme(equation, policy, tau_ref), *n).u;
}

std::map<long, Field> reference_checkpoints(const Field& u0, const SchemeSpec& equation,
                                            ReferencePolicy policy, double tau_ref,
                                            const std::vector<long>& step_counts) {
  std::map<long, Field> out;
  if (step_counts.empty()) return out;
  const long last = *std::max_element(step_counts.begin(), step_counts.end());
  std::vector<long> wanted(step_counts);
  std::sort(wanted.begin(), wanted.end());
  if (wanted.front() < 0) throw ConfigError("negative reference step count");
  if (wanted.front() == 0) out.emplace(0, u0.to_physical());
  integrators::evolve(u0, reference_scheme(equation, policy, tau_ref), last,
                      [&](long n, const Field& u) {
                        if (std::binary_search(wanted.begin(), wanted.end(), n)) out.emplace(n, u);
                      });
  return out;
}

}  // namespace lowreg::analysis

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lowreg/integrators/scheme.hpp"
#include "lowreg/spectral/field.hpp"

namespace lowreg::analysis {

using integrators::SchemeSpec;
using spectral::Field;

enum class ReferencePolicy {
  SelfRefined,    ///< the scheme under test with a tiny step
  StrangRefined,  ///< Strang splitting of the same equation with a tiny step
};

/// Default reference step: 2^{ceil(log2 T) - 16}, a power of two close to
/// T / 2^16 that divides every dyadic and j/512 time up to T.
double default_reference_step(double T);

/// Scheme used to build the reference for `equation` (its tau is ignored).
/// Throws ConfigError if StrangRefined is requested for an equation without a
/// Strang splitting.
SchemeSpec reference_scheme(const SchemeSpec& equation, ReferencePolicy policy, double tau_ref);

/// Reference solution at time T with step tau_ref (0 selects the default).
/// tau_ref must divide T to 1e-12 relative.
Field reference_solution(const Field& u0, const SchemeSpec& equation, double T,
                         ReferencePolicy policy, double tau_ref = 0.0);

/// Reference snapshots at several step counts of tau_ref, from one pass.
std::map<long, Field> reference_checkpoints(const Field& u0, const SchemeSpec& equation,
                                            ReferencePolicy policy, double tau_ref,
                                            const std::vector<long>& step_counts);

/// Number of tau_ref steps that reach t, or nullopt if t is not a multiple.
std::optional<long> steps_to_reach(double t, double tau_ref);

}  // namespace lowreg::analysis

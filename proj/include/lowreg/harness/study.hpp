#pragma once

#include "lowreg/analysis/convergence.hpp"
#include "lowreg/harness/config.hpp"
#include "lowreg/spectral/field.hpp"

namespace lowreg::harness {

/// Errors below this multiple of max(1, |u0|_{H^r}) are treated as roundoff
/// and excluded from slope fits.
inline constexpr double kRelativeRoundoffFloor = 1e-12;

/// Initial field described by config.initial on `grid` (physical view).
spectral::Field initial_field(const StudyConfig& config, const spectral::GridPtr& grid);

/// Evolves every (scheme, tau) pair of the config to t = round(T/tau) * tau,
/// measures the H^r distance to the reference at the same time, flags floor
/// rows and fits slopes.
///
/// The config is validated before any computation. Blow-up or any other
/// failure inside a row marks that row failed and never aborts the others.
/// Rows are ordered by scheme (config order) then decreasing tau, regardless
/// of the worker count.
analysis::ErrorTable run_convergence_study(const StudyConfig& config);

}  // namespace lowreg::harness

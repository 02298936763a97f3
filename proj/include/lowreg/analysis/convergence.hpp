#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lowreg/integrators/scheme.hpp"

namespace lowreg::analysis {

/// Half-open index range [begin, end) into a list sorted by decreasing tau.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Least-squares slope of log(error) against log(tau) over `window`.
/// Throws ConfigError if the window holds fewer than three points, if any
/// error in it is not positive, or if all taus coincide.
double estimate_order(std::span<const double> taus, std::span<const double> errors,
                      IndexRange window);

/// Which rungs of a scheme's ladder enter the slope fit: after sorting by
/// decreasing tau, the `drop_large` largest and `drop_small` smallest are
/// discarded.
struct SlopeWindow {
  std::size_t drop_large = 2;
  std::size_t drop_small = 2;
};

struct ErrorRow {
  integrators::SchemeKind scheme = integrators::SchemeKind::LowRegExp;
  double tau = 0.0;
  long n_steps = 0;
  double t = 0.0;  ///< comparison time n_steps * tau
  double error = 0.0;
  double norm_r = 0.0;
  bool failed = false;
  bool below_floor = false;  ///< excluded from fits (reference/roundoff floor)
  std::string failure;       ///< diagnostic when failed
  double wall_seconds = 0.0;
};

/// Error records of one convergence study plus fitted slopes.
struct ErrorTable {
  std::vector<ErrorRow> rows;
  std::map<integrators::SchemeKind, std::optional<double>> fitted_slopes;

  std::vector<const ErrorRow*> rows_for(integrators::SchemeKind kind) const;
};

/// Flags rows whose error lies below the floor of what the reference can
/// resolve: 10 * e_min * (tau_ref / tau_min) for a refined reference
/// (tau_ref > 0), plus the roundoff level `roundoff_floor` in all cases.
void flag_floor_rows(ErrorTable& table, double tau_ref, double roundoff_floor);

/// Fits one slope per scheme over the window, skipping failed and
/// below-floor rows; nullopt when fewer than three usable rows remain.
void fit_slopes(ErrorTable& table, const SlopeWindow& window);

}  // namespace lowreg::analysis

#include "lowreg/analysis/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lowreg/error.hpp"

namespace lowreg::analysis {

double estimate_order(std::span<const double> taus, std::span<const double> errors,
                      IndexRange window) {
  if (taus.size() != errors.size()) throw ConfigError("estimate_order: size mismatch");
  if (window.end > taus.size() || window.begin > window.end) {
    throw ConfigError("estimate_order: window out of range");
  }
  const std::size_t n = window.end - window.begin;
  if (n < 3) throw ConfigError("estimate_order: need at least three points");
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = window.begin; i < window.end; ++i) {
    if (!(errors[i] > 0.0) || !std::isfinite(errors[i])) {
      throw ConfigError("estimate_order: errors must be positive and finite");
    }
    if (!(taus[i] > 0.0)) throw ConfigError("estimate_order: taus must be positive");
    sx += std::log(taus[i]);
    sy += std::log(errors[i]);
  }
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = window.begin; i < window.end; ++i) {
    const double dx = std::log(taus[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(errors[i]) - my);
  }
  if (sxx == 0.0) throw ConfigError("estimate_order: degenerate window (all taus equal)");
  return sxy / sxx;
}

std::vector<const ErrorRow*> ErrorTable::rows_for(integrators::SchemeKind kind) const {
  std::vector<const ErrorRow*> out;
  for (const auto& r : rows) {
    if (r.scheme == kind) out.push_back(&r);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ErrorRow* a, const ErrorRow* b) { return a->tau > b->tau; });
  return out;
}

void flag_floor_rows(ErrorTable& table, double tau_ref, double roundoff_floor) {
  std::set<integrators::SchemeKind> kinds;
  for (const auto& r : table.rows) kinds.insert(r.scheme);
  for (auto kind : kinds) {
    double floor = roundoff_floor;
    if (tau_ref > 0.0) {
      const ErrorRow* smallest = nullptr;
      for (const auto& r : table.rows) {
        if (r.scheme != kind || r.failed || !(r.error > 0.0)) continue;
        if (smallest == nullptr || r.tau < smallest->tau) smallest = &r;
      }
      if (smallest != nullptr) {
        floor = std::max(floor, 10.0 * smallest->error * (tau_ref / smallest->tau));
      }
    }
    for (auto& r : table.rows) {
      if (r.scheme == kind && !r.failed) r.below_floor = !(r.error >= floor);
    }
  }
}

void fit_slopes(ErrorTable& table, const SlopeWindow& window) {
  std::set<integrators::SchemeKind> kinds;
  for (const auto& r : table.rows) kinds.insert(r.scheme);
  table.fitted_slopes.clear();
  for (auto kind : kinds) {
    const auto rows = table.rows_for(kind);
    std::vector<double> taus, errors;
    const std::size_t n = rows.size();
    if (n > window.drop_large + window.drop_small) {
      for (std::size_t i = window.drop_large; i < n - window.drop_small; ++i) {
        if (rows[i]->failed || rows[i]->below_floor) continue;
        taus.push_back(rows[i]->tau);
        errors.push_back(rows[i]->error);
      }
    }
    std::optional<double> slope;
    const bool distinct = !taus.empty() && taus.front() != taus.back();
    if (taus.size() >= 3 && distinct) slope = estimate_order(taus, errors, {0, taus.size()});
    table.fitted_slopes[kind] = slope;
  }
}

}  // namespace lowreg::analysis

#include "lowreg/harness/study.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <thread>

#include "lowreg/analysis/initial_data.hpp"
#include "lowreg/analysis/norms.hpp"
#include "lowreg/analysis/reference.hpp"
#include "lowreg/error.hpp"
#include "lowreg/integrators/stepper.hpp"

namespace lowreg::harness {

namespace {

using analysis::ErrorRow;
using analysis::ErrorTable;
using spectral::Field;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Runs job(i) for i in [0, count) on `workers` threads. Each job writes only
/// its own output slot, so completion order does not matter.
void run_jobs(std::size_t count, int workers, const std::function<void(std::size_t)>& job) {
  const auto n_threads = static_cast<std::size_t>(std::clamp<long>(workers, 1, static_cast<long>(count)));
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < n_threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) job(i);
    });
  }
  for (auto& t : pool) t.join();
}

/// A reference trajectory shared by every scheme that maps to the same
/// reference scheme kind.
struct ReferenceJob {
  SchemeKind kind;
  std::map<long, Field> checkpoints;
  std::string failure;
};

}  // namespace

Field initial_field(const StudyConfig& config, const spectral::GridPtr& grid) {
  const auto& init = config.initial;
  switch (init.kind) {
    case InitialKind::Rough: {
      analysis::RoughDataSpec spec;
      spec.theta = init.theta;
      spec.seed = init.seed;
      spec.normalize = init.normalize;
      return analysis::generate_rough_data(spec, grid);
    }
    case InitialKind::RawRand:
      return analysis::generate_raw_rand(init.seed, grid, init.normalize);
    case InitialKind::SinCos:
      return analysis::smooth_data(analysis::SmoothKind::SinCos, grid);
    case InitialKind::Sin:
      return analysis::smooth_data(analysis::SmoothKind::Sin, grid);
    case InitialKind::PlaneWave:
      return analysis::plane_wave(grid, init.wave_number, init.amplitude);
  }
  throw ConfigError("unknown initial data kind");
}

ErrorTable run_convergence_study(const StudyConfig& config) {
  config.validate();

  const auto grid = spectral::make_grid(config.dimension, config.K);
  const Field u0 = initial_field(config, grid);
  const auto taus = config.ladder.taus();
  const double tau_ref = config.reference_step();

  std::vector<long> steps(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) steps[i] = std::lround(config.T / taus[i]);

  // References first: one trajectory per distinct reference scheme.
  std::vector<ReferenceJob> refs;
  std::map<SchemeKind, std::size_t> ref_of;
  if (config.reference != ReferenceKind::Exact) {
    const auto policy = config.reference == ReferenceKind::StrangRefined
                            ? analysis::ReferencePolicy::StrangRefined
                            : analysis::ReferencePolicy::SelfRefined;
    for (auto kind : config.schemes) {
      const auto ref_kind =
          analysis::reference_scheme(config.scheme_spec(kind, tau_ref), policy, tau_ref).kind;
      auto it = std::find_if(refs.begin(), refs.end(),
                             [&](const ReferenceJob& r) { return r.kind == ref_kind; });
      if (it == refs.end()) {
        refs.push_back({ref_kind, {}, {}});
        it = std::prev(refs.end());
      }
      ref_of[kind] = static_cast<std::size_t>(it - refs.begin());
    }
    std::vector<long> ref_steps;
    for (std::size_t i = 0; i < taus.size(); ++i) {
      ref_steps.push_back(*analysis::steps_to_reach(steps[i] * taus[i], tau_ref));
    }
    run_jobs(refs.size(), config.workers, [&](std::size_t i) {
      try {
        auto spec = config.scheme_spec(refs[i].kind, tau_ref);
        refs[i].checkpoints = analysis::reference_checkpoints(
            u0, spec, analysis::ReferencePolicy::SelfRefined, tau_ref, ref_steps);
      } catch (const std::exception& e) {
        refs[i].failure = std::string("reference failed: ") + e.what();
      }
    });
  }

  const double floor =
      kRelativeRoundoffFloor * std::max(1.0, analysis::h_r_norm(u0, config.error_norm_r));

  ErrorTable table;
  for (auto kind : config.schemes) {
    for (std::size_t i = 0; i < taus.size(); ++i) {
      ErrorRow row;
      row.scheme = kind;
      row.tau = taus[i];
      row.n_steps = steps[i];
      row.t = steps[i] * taus[i];
      row.norm_r = config.error_norm_r;
      table.rows.push_back(row);
    }
  }

  run_jobs(table.rows.size(), config.workers, [&](std::size_t j) {
    ErrorRow& row = table.rows[j];
    const auto start = Clock::now();
    try {
      Field reference = [&] {
        if (config.reference == ReferenceKind::Exact) {
          return analysis::plane_wave_solution(grid, config.initial.wave_number,
                                               config.initial.amplitude, config.mu, config.p,
                                               row.t);
        }
        const auto& ref = refs[ref_of.at(row.scheme)];
        if (!ref.failure.empty()) throw BlowUpError(ref.failure);
        return ref.checkpoints.at(*analysis::steps_to_reach(row.t, tau_ref));
      }();
      const auto state = integrators::evolve(u0, config.scheme_spec(row.scheme, row.tau), row.n_steps);
      row.error = analysis::h_r_distance(state.u, reference, config.error_norm_r);
      if (!std::isfinite(row.error)) throw BlowUpError("non-finite error");
    } catch (const std::exception& e) {
      row.failed = true;
      row.error = std::nan("");
      row.failure = e.what();
    }
    row.wall_seconds = seconds_since(start);
  });

  analysis::flag_floor_rows(table, config.reference == ReferenceKind::Exact ? 0.0 : tau_ref, floor);
  analysis::fit_slopes(table, config.window);
  return table;
}

}  // namespace lowreg::harness

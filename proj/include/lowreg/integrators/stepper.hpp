#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lowreg/integrators/scheme.hpp"
#include "lowreg/spectral/field.hpp"
#include "lowreg/spectral/multiplier.hpp"

namespace lowreg::integrators {

using spectral::Field;
using spectral::GridPtr;

/// Amplitude above which a step is treated as blow-up.
inline constexpr double kBlowUpAmplitude = 1e8;
/// Smallest admissible |1 + i mu tau u| in the quadratic subflow.
inline constexpr double kSingularDenominator = 1e-10;

/// One-step map u^n -> u^{n+1} for a fixed (grid, scheme, tau).
///
/// All Fourier multipliers a scheme needs are built once in the
/// constructor; step() is const and may be called from several threads.
/// Steps take the current time explicitly even though every scheme in the
/// original variable is autonomous.
class Stepper {
 public:
  Stepper(GridPtr grid, const SchemeSpec& spec);

  const SchemeSpec& spec() const noexcept { return spec_; }
  const GridPtr& grid() const noexcept { return grid_; }

  /// Advances u by one step; the result is in physical view.
  /// Throws BlowUpError (or SingularSubstepError) on non-finite output,
  /// amplitude above kBlowUpAmplitude, or a singular quadratic subflow.
  Field step(const Field& u, double t) const;

 private:
  Field lowreg(const Field& u) const;
  Field classical_exp(const Field& u) const;
  Field lie(const Field& u) const;
  Field strang(const Field& u) const;
  Field quad_u2(const Field& u) const;
  Field quad_abs2(const Field& u) const;
  Field lie_quad(const Field& u) const;
  Field strang_quad(const Field& u) const;

  GridPtr grid_;
  SchemeSpec spec_;
  spectral::Multiplier flow_;
  std::optional<spectral::Multiplier> half_flow_;
  std::optional<spectral::Multiplier> back_flow_;
  std::optional<spectral::Multiplier> phi1_;
  std::optional<spectral::Multiplier> inv_dx_;
};

// Single steps with the scheme selected by name. Each checks that
// spec.kind matches and throws ConfigError otherwise.
Field step_lowreg(const Field& u, double t, const SchemeSpec& spec);
Field step_classical_exp(const Field& u, double t, const SchemeSpec& spec);
Field step_lie(const Field& u, double t, const SchemeSpec& spec);
Field step_strang(const Field& u, double t, const SchemeSpec& spec);
Field step_quad_u2(const Field& u, double t, const SchemeSpec& spec);
Field step_quad_abs2(const Field& u, double t, const SchemeSpec& spec);
Field step_lie_quad(const Field& u, double t, const SchemeSpec& spec);
Field step_strang_quad(const Field& u, double t, const SchemeSpec& spec);

/// Any scheme, dispatched on spec.kind.
Field step(const Field& u, double t, const SchemeSpec& spec);

/// LowRegExp in the twisted variable v = exp(-i t Laplacian) u:
/// v^{n+1} = v^n - i mu tau exp(-i t_n L)[(exp(i t_n L) v)^{p+1}
///           (phi_1(-2 i tau L) (exp(-i t_n L) conj v)^p)].
Field step_lowreg_twisted(const Field& v, double t, const SchemeSpec& spec);

struct StepperState {
  Field u;
  double t = 0.0;
  long step_index = 0;
  /// max_j |u(x_j)| after each step (entry 0 is the initial field).
  std::vector<double> max_amplitude;
};

/// Called after every completed step with (step_index, u).
using StepObserver = std::function<void(long, const Field&)>;

/// Applies the selected stepper n_steps times starting at t = 0.
/// Time is recomputed as step_index * tau. Stepper errors are rethrown as
/// BlowUpError carrying the failing step index.
StepperState evolve(const Field& u0, const SchemeSpec& spec, long n_steps,
                    const StepObserver& observer = {});

/// max_j |u(x_j)|.
double max_amplitude(const Field& u);

}  // namespace lowreg::integrators

#include "lowreg/integrators/stepper.hpp"

#include <cmath>
#include <string>

#include "lowreg/error.hpp"

namespace lowreg::integrators {

using spectral::cplx;
using spectral::Multiplier;
using spectral::View;

namespace {

constexpr cplx I{0.0, 1.0};

bool is_integer(double x) { return std::floor(x) == x; }

cplx int_pow(cplx z, long n) {
  cplx r{1.0, 0.0};
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

double int_pow(double x, long n) {
  double r = 1.0;
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

// Principal-branch z^a; 0^a = 0 for a > 0.
cplx complex_pow(cplx z, double a) {
  if (is_integer(a) && a >= 0.0) return int_pow(z, static_cast<long>(a));
  if (z == cplx(0.0)) return 0.0;
  return std::pow(z, a);
}

// |u|^{2p}, evaluated as exp(p log |u|^2) for non-integer p.
double abs_pow_2p(cplx u, double p) {
  const double m = std::norm(u);
  if (is_integer(p)) return int_pow(m, static_cast<long>(p));
  if (m < 1e-300) return 0.0;
  return std::exp(p * std::log(m));
}

template <class F>
Field pointwise(const Field& u, F&& f) {
  Field x = u.to_physical();
  for (auto& z : x.data()) z = f(z);
  return x;
}

// u in physical view times w in physical view.
Field product(const Field& a, const Field& b) {
  Field x = a.to_physical();
  const Field y = b.to_physical();
  auto xd = x.data();
  const auto yd = y.data();
  for (std::size_t i = 0; i < xd.size(); ++i) xd[i] *= yd[i];
  return x;
}

Field physical_apply(const Multiplier& m, const Field& u) {
  return spectral::apply(m, u).to_physical();
}

void check_finite(const Field& u) {
  double peak = 0.0;
  for (const cplx& z : u.data()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw BlowUpError("non-finite value in solution");
    }
    peak = std::max(peak, std::abs(z));
  }
  if (peak > kBlowUpAmplitude) {
    throw BlowUpError("solution amplitude " + std::to_string(peak) + " exceeds blow-up threshold");
  }
}

// The quadratic subflow u -> u / (1 + i mu tau u), exact for i u' = mu u^2.
Field quadratic_subflow(const Field& u, double mu, double tau) {
  return pointwise(u, [&](cplx z) {
    const cplx den = 1.0 + I * mu * tau * z;
    if (std::abs(den) < kSingularDenominator) {
      throw SingularSubstepError("quadratic subflow is singular: |1 + i mu tau u| < 1e-10");
    }
    return z / den;
  });
}

// Nonlinearity N(u) of the equation, pointwise.
Field nonlinearity(const Field& u, const SchemeSpec& s) {
  switch (s.equation) {
    case Equation::PowerNls:
      return pointwise(u, [p = s.p](cplx z) { return abs_pow_2p(z, p) * z; });
    case Equation::QuadU2:
      return pointwise(u, [](cplx z) { return z * z; });
    case Equation::QuadAbs2:
      return pointwise(u, [](cplx z) { return cplx(std::norm(z)); });
  }
  return u;
}

// (u)^{p+1} * phi_1(-2 i tau L)(conj u)^p, the core of the low-regularity
// update; `u` is in physical view.
Field lowreg_core(const Field& u, const Multiplier& phi1, double p) {
  const Field conj_pow = pointwise(u, [p](cplx z) { return complex_pow(std::conj(z), p); });
  Field filtered = physical_apply(phi1, conj_pow);
  const Field up = u.to_physical();
  auto f = filtered.data();
  const auto ud = up.data();
  for (std::size_t i = 0; i < f.size(); ++i) f[i] *= complex_pow(ud[i], p + 1.0);
  return filtered;
}

}  // namespace

Stepper::Stepper(GridPtr grid, const SchemeSpec& spec)
    : grid_(std::move(grid)), spec_(spec), flow_(spectral::free_flow(grid_, spec.tau)) {
  spec_.validate_structure(grid_->dim());
  switch (spec_.kind) {
    case SchemeKind::LowRegExp:
      phi1_ = spectral::phi1_of_scaled_laplacian(grid_, cplx(0.0, -2.0 * spec_.tau));
      break;
    case SchemeKind::ClassicalExp:
      phi1_ = spectral::phi1_of_scaled_laplacian(grid_, cplx(0.0, spec_.tau));
      break;
    case SchemeKind::StrangSplit:
    case SchemeKind::StrangQuad:
      half_flow_ = spectral::free_flow(grid_, 0.5 * spec_.tau);
      break;
    case SchemeKind::QuadU2:
      inv_dx_ = spectral::inverse_derivative(grid_, 0);
      break;
    case SchemeKind::QuadAbsU2:
      inv_dx_ = spectral::inverse_derivative(grid_, 0);
      back_flow_ = spectral::free_flow(grid_, -spec_.tau);
      break;
    case SchemeKind::LieSplit:
    case SchemeKind::LieQuad:
      break;
  }
}

Field Stepper::step(const Field& u, double /*t*/) const {
  if (!u.grid().same_shape(*grid_)) throw GridMismatchError("field grid differs from stepper grid");
  Field out = [&] {
    switch (spec_.kind) {
      case SchemeKind::LowRegExp: return lowreg(u);
      case SchemeKind::ClassicalExp: return classical_exp(u);
      case SchemeKind::LieSplit: return lie(u);
      case SchemeKind::StrangSplit: return strang(u);
      case SchemeKind::QuadU2: return quad_u2(u);
      case SchemeKind::QuadAbsU2: return quad_abs2(u);
      case SchemeKind::LieQuad: return lie_quad(u);
      case SchemeKind::StrangQuad: return strang_quad(u);
    }
    throw ConfigError("unknown scheme kind");
  }();
  check_finite(out);
  return out;
}

Field Stepper::lowreg(const Field& u) const {
  const Field up = u.to_physical();
  Field inner = lowreg_core(up, *phi1_, spec_.p);
  const cplx coef = -I * spec_.mu * spec_.tau;
  auto d = inner.data();
  const auto ud = up.data();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = ud[i] + coef * d[i];
  return physical_apply(flow_, inner);
}

Field Stepper::classical_exp(const Field& u) const {
  Field linear = spectral::apply(flow_, u);
  const Field forced = spectral::apply(*phi1_, nonlinearity(u, spec_));
  const cplx coef = -I * spec_.mu * spec_.tau;
  auto l = linear.data();
  const auto f = forced.data();
  for (std::size_t i = 0; i < l.size(); ++i) l[i] += coef * f[i];
  return std::move(linear).to_physical();
}

Field Stepper::lie(const Field& u) const {
  const Field half = physical_apply(flow_, u);
  const double mu_tau = spec_.mu * spec_.tau;
  const double p = spec_.p;
  return pointwise(half, [=](cplx z) { return std::polar(1.0, -mu_tau * abs_pow_2p(z, p)) * z; });
}

Field Stepper::strang(const Field& u) const {
  const Field a = physical_apply(*half_flow_, u);
  const double mu_tau = spec_.mu * spec_.tau;
  const double p = spec_.p;
  const Field b =
      pointwise(a, [=](cplx z) { return std::polar(1.0, -mu_tau * abs_pow_2p(z, p)) * z; });
  return physical_apply(*half_flow_, b);
}

Field Stepper::quad_u2(const Field& u) const {
  const double mu = spec_.mu;
  const double tau = spec_.tau;
  const Field uc = u.to_fourier();
  const cplx c0 = uc.data()[0];

  const Field evolved = physical_apply(flow_, uc);
  const Field antideriv = physical_apply(*inv_dx_, uc);
  const Field evolved_antideriv = physical_apply(flow_, antideriv);
  const Field antideriv_sq_evolved =
      physical_apply(flow_, pointwise(antideriv, [](cplx z) { return z * z; }));

  Field out(grid_, View::Physical);
  auto o = out.data();
  const auto e = evolved.data();
  const auto ea = evolved_antideriv.data();
  const auto as = antideriv_sq_evolved.data();
  const cplx lin = 1.0 - 2.0 * I * mu * tau * c0;
  const cplx constant = I * mu * tau * c0 * c0;
  for (std::size_t i = 0; i < o.size(); ++i) {
    o[i] = lin * e[i] + constant + 0.5 * mu * ea[i] * ea[i] - 0.5 * mu * as[i];
  }
  return out;
}

Field Stepper::quad_abs2(const Field& u) const {
  const double mu = spec_.mu;
  const double tau = spec_.tau;
  const Field uc = u.to_fourier();
  const Field up = uc.to_physical();
  const cplx c0 = uc.data()[0];
  double mass = 0.0;
  for (const cplx& z : uc.data()) mass += std::norm(z);

  const Field evolved = physical_apply(flow_, uc);
  const Field conj_u = pointwise(up, [](cplx z) { return std::conj(z); });
  const Field conj_antideriv = spectral::apply(*inv_dx_, conj_u);
  const Field back_conj_antideriv = physical_apply(*back_flow_, conj_antideriv);
  const Field evolved_mixed = physical_apply(flow_, product(up, conj_antideriv));

  Field bracket(grid_, View::Physical);
  {
    auto b = bracket.data();
    const auto e = evolved.data();
    const auto bc = back_conj_antideriv.data();
    const auto em = evolved_mixed.data();
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = e[i] * bc[i] - em[i];
  }
  const Field correction = physical_apply(*inv_dx_, bracket);

  cplx constant = -I * mu * tau * mass;
  if (spec_.quad_zero_mode_fix) constant += I * mu * tau * std::norm(c0);
  const cplx lin = 1.0 - I * mu * tau * std::conj(c0);

  Field out(grid_, View::Physical);
  auto o = out.data();
  const auto e = evolved.data();
  const auto c = correction.data();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = lin * e[i] + constant + 0.5 * mu * c[i];
  return out;
}

Field Stepper::lie_quad(const Field& u) const {
  return physical_apply(flow_, quadratic_subflow(u, spec_.mu, spec_.tau));
}

Field Stepper::strang_quad(const Field& u) const {
  const Field a = physical_apply(*half_flow_, u);
  return physical_apply(*half_flow_, quadratic_subflow(a, spec_.mu, spec_.tau));
}

namespace {

Field checked_step(SchemeKind expected, const Field& u, double t, const SchemeSpec& spec) {
  if (spec.kind != expected) {
    throw ConfigError("expected scheme " + std::string(to_string(expected)) + ", got " +
                      std::string(to_string(spec.kind)));
  }
  return Stepper(u.grid_ptr(), spec).step(u, t);
}

}  // namespace

Field step_lowreg(const Field& u, double t, const SchemeSpec& s) {
  return checked_step(SchemeKind::LowRegExp, u, t, s);
}
Field step_classical_exp(const Field& u, double t, const SchemeSpec& s) {
  return checked_step(SchemeKind::ClassicalExp, u, t, s);
}
Field step_lie(const Field& u, double t, const SchemeSpec& s) {
  return checked_step(SchemeKind::LieSplit, u, t, s);
}
Field step_strang(const Field& u, double t, const SchemeSpec& s) {
  return checked_step(SchemeKind::StrangSplit, u, t, s);
}
Field step_quad_u2(const Field& u, double t, const SchemeSpec& s) {
  return checked_step(SchemeKind::QuadU2, u, t, s);
}
Field step_quad_abs2(const Field& u, double t, const SchemeSpec& s) {
  return checked_step(SchemeKind::QuadAbsU2, u, t, s);
}
Field step_lie_quad(const Field& u, double t, const SchemeSpec& s) {
  return checked_step(SchemeKind::LieQuad, u, t, s);
}
Field step_strang_quad(const Field& u, double t, const SchemeSpec& s) {
  return checked_step(SchemeKind::StrangQuad, u, t, s);
}

Field step(const Field& u, double t, const SchemeSpec& spec) {
  return Stepper(u.grid_ptr(), spec).step(u, t);
}

Field step_lowreg_twisted(const Field& v, double t, const SchemeSpec& spec) {
  if (spec.kind != SchemeKind::LowRegExp) {
    throw ConfigError("step_lowreg_twisted requires LowRegExp");
  }
  spec.validate_structure(v.grid().dim());
  const GridPtr& grid = v.grid_ptr();
  const auto phi1 = spectral::phi1_of_scaled_laplacian(grid, cplx(0.0, -2.0 * spec.tau));
  const Field u = physical_apply(spectral::free_flow(grid, t), v);
  const Field core = lowreg_core(u, phi1, spec.p);
  Field twisted = spectral::apply(spectral::free_flow(grid, -t), core);
  const Field vc = v.to_fourier();
  const cplx coef = -I * spec.mu * spec.tau;
  auto d = twisted.data();
  const auto vd = vc.data();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = vd[i] + coef * d[i];
  Field out = std::move(twisted).to_physical();
  check_finite(out);
  return out;
}

double max_amplitude(const Field& u) {
  const Field x = u.to_physical();
  double peak = 0.0;
  for (const cplx& z : x.data()) peak = std::max(peak, std::abs(z));
  return peak;
}

StepperState evolve(const Field& u0, const SchemeSpec& spec, long n_steps,
                    const StepObserver& observer) {
  if (n_steps < 0) throw ConfigError("evolve: n_steps must be >= 0");
  spec.validate(u0.grid().dim());
  const Stepper stepper(u0.grid_ptr(), spec);
  StepperState state{u0.to_physical(), 0.0, 0, {}};
  state.max_amplitude.reserve(static_cast<std::size_t>(n_steps) + 1);
  state.max_amplitude.push_back(max_amplitude(state.u));
  for (long n = 0; n < n_steps; ++n) {
    try {
      state.u = stepper.step(state.u, static_cast<double>(n) * spec.tau);
    } catch (const SingularSubstepError& e) {
      throw SingularSubstepError(std::string(e.what()) + " at step " + std::to_string(n + 1), n + 1);
    } catch (const BlowUpError& e) {
      throw BlowUpError(std::string(e.what()) + " at step " + std::to_string(n + 1), n + 1);
    }
    state.step_index = n + 1;
    state.t = static_cast<double>(state.step_index) * spec.tau;
    state.max_amplitude.push_back(max_amplitude(state.u));
    if (observer) observer(state.step_index, state.u);
  }
  return state;
}

}  // namespace lowreg::integrators

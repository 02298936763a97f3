#include "lowreg/harness/oracle_check.hpp"

#include <algorithm>
#include <cmath>

#include "lowreg/analysis/initial_data.hpp"
#include "lowreg/analysis/oracles.hpp"
#include "lowreg/error.hpp"
#include "lowreg/integrators/stepper.hpp"

namespace lowreg::harness {

namespace {

using integrators::SchemeKind;
using integrators::SchemeSpec;
using spectral::cplx;
using spectral::Field;

constexpr double kTolerance = 1e-12;
constexpr double kTau = 0.1;
constexpr double kMu = 1.0;

double max_coefficient_deviation(const Field& a, const Field& b) {
  const auto fa = a.to_fourier();
  const auto fb = b.to_fourier();
  double m = 0.0;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    m = std::max(m, std::abs(fa.coefficients()[i] - fb.coefficients()[i]));
  }
  return m;
}

/// w - i mu I, combined coefficientwise.
Field subtract_duhamel(const Field& w, const Field& integral) {
  auto c = w.to_fourier();
  const auto ic = integral.to_fourier();
  for (std::size_t i = 0; i < c.size(); ++i) {
    c.data()[i] -= cplx(0.0, kMu) * ic.coefficients()[i];
  }
  return c;
}

Field band_limited(const Field& u) {
  auto c = u.to_fourier();
  const auto& g = c.grid();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (2 * std::abs(g.wavenumber(i, 0)) >= g.max_mode()) c.data()[i] = 0.0;
  }
  return c.to_physical();
}

}  // namespace

std::vector<OracleDeviation> run_oracle_check(int K, std::uint64_t seed) {
  if (K < 2 || K > analysis::kCubicOracleMaxK) {
    throw ConfigError("oracle check needs 2 <= K <= " + std::to_string(analysis::kCubicOracleMaxK));
  }
  const auto grid = spectral::make_grid(1, K);
  const Field w = analysis::generate_raw_rand(seed, grid, true);
  std::vector<OracleDeviation> out;

  const auto cubic = SchemeSpec::make(SchemeKind::LowRegExp, kMu, kTau, 1.0);
  for (double t_n : {0.0, 0.37}) {
    const Field u = spectral::apply(spectral::free_flow(grid, t_n), w);
    const Field stepped = integrators::step_lowreg(u, t_n, cubic);
    const Field expected =
        spectral::apply(spectral::free_flow(grid, t_n + kTau),
                        subtract_duhamel(w, analysis::oracle_cubic_dominant(w, t_n, kTau)));
    char label[64];
    std::snprintf(label, sizeof label, "LowRegExp vs cubic sum (t_n = %g)", t_n);
    out.push_back({label, max_coefficient_deviation(stepped, expected), kTolerance});
  }

  const Field v = band_limited(w);
  const auto flow = spectral::free_flow(grid, kTau);
  {
    const auto spec = SchemeSpec::make(SchemeKind::QuadU2, kMu, kTau);
    const Field expected =
        spectral::apply(flow, subtract_duhamel(v, analysis::oracle_quad_integral(v, 0.0, kTau, false)));
    out.push_back({"QuadU2 vs quadratic sum",
                   max_coefficient_deviation(integrators::step_quad_u2(v, 0.0, spec), expected),
                   kTolerance});
  }
  {
    const auto spec = SchemeSpec::make(SchemeKind::QuadAbsU2, kMu, kTau);
    const Field expected =
        spectral::apply(flow, subtract_duhamel(v, analysis::oracle_quad_integral(v, 0.0, kTau, true)));
    out.push_back({"QuadAbsU2 vs quadratic sum",
                   max_coefficient_deviation(integrators::step_quad_abs2(v, 0.0, spec), expected),
                   kTolerance});
  }
  return out;
}

}  // namespace lowreg::harness

#include "lowreg/analysis/oracles.hpp"

#include <string>

#include "lowreg/error.hpp"
#include "lowreg/spectral/multiplier.hpp"

namespace lowreg::analysis {

using spectral::cplx;
using spectral::View;

namespace {

constexpr cplx I{0.0, 1.0};

void check_oracle_grid(const Field& w, int max_k, const char* name) {
  if (w.grid().dim() != 1) throw ConfigError(std::string(name) + ": d = 1 only");
  if (w.grid().max_mode() > max_k) {
    throw ConfigError(std::string(name) + ": grid too large (K = " +
                      std::to_string(w.grid().max_mode()) + " > " + std::to_string(max_k) + ")");
  }
}

// kernel(k1, k2, k3, l) returns the weight multiplying conj(c_k1) c_k2 c_k3.
template <class Kernel>
Field cubic_sum(const Field& w, Kernel&& kernel) {
  const auto& grid = w.grid();
  const Field c = w.to_fourier();
  const auto cd = c.data();
  const auto ks = grid.axis_wavenumbers();
  Field out(w.grid_ptr(), View::Fourier);
  auto od = out.data();
  const std::size_t n = ks.size();
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    const cplx a = std::conj(cd[i1]);
    if (a == cplx(0.0)) continue;
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      const cplx ab = a * cd[i2];
      if (ab == cplx(0.0)) continue;
      for (std::size_t i3 = 0; i3 < n; ++i3) {
        const long k1 = ks[i1], k2 = ks[i2], k3 = ks[i3];
        const int l = grid.wrap(-k1 + k2 + k3);
        od[grid.index_of(l)] += kernel(k1, k2, k3, static_cast<long>(l)) * ab * cd[i3];
      }
    }
  }
  return out;
}

// int_0^tau e^{i (t_n + s) omega} ds
cplx phase_integral(double omega, double t_n, double tau) {
  return std::polar(1.0, t_n * omega) * tau * spectral::phi1(I * (omega * tau));
}

}  // namespace

Field oracle_cubic_integral(const Field& w, double t_n, double tau) {
  check_oracle_grid(w, kCubicOracleMaxK, "oracle_cubic_integral");
  return cubic_sum(w, [&](long k1, long k2, long k3, long l) {
    const double omega = static_cast<double>(l * l + k1 * k1 - k2 * k2 - k3 * k3);
    return phase_integral(omega, t_n, tau);
  });
}

Field oracle_cubic_dominant(const Field& w, double t_n, double tau) {
  check_oracle_grid(w, kCubicOracleMaxK, "oracle_cubic_dominant");
  return cubic_sum(w, [&](long k1, long k2, long k3, long l) {
    const double omega = static_cast<double>(l * l + k1 * k1 - k2 * k2 - k3 * k3);
    const double dominant = 2.0 * static_cast<double>(k1 * k1);
    return std::polar(1.0, t_n * omega) * tau * spectral::phi1(I * (dominant * tau));
  });
}

Field oracle_quad_integral(const Field& w, double t_n, double tau, bool conjugated) {
  check_oracle_grid(w, kQuadOracleMaxK, "oracle_quad_integral");
  const auto& grid = w.grid();
  const Field c = w.to_fourier();
  const auto cd = c.data();
  const auto ks = grid.axis_wavenumbers();
  Field out(w.grid_ptr(), View::Fourier);
  auto od = out.data();
  const std::size_t n = ks.size();
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      const long k1 = ks[i1], k2 = ks[i2];
      // u^2:   l = k1 + k2, omega = l^2 - k1^2 - k2^2
      // |u|^2: l = k1 - k2, omega = l^2 - k1^2 + k2^2
      const long l = grid.wrap(conjugated ? k1 - k2 : k1 + k2);
      const cplx second = conjugated ? std::conj(cd[i2]) : cd[i2];
      const double omega =
          static_cast<double>(l * l - k1 * k1 + (conjugated ? k2 * k2 : -k2 * k2));
      od[grid.index_of(static_cast<int>(l))] +=
          phase_integral(omega, t_n, tau) * cd[i1] * second;
    }
  }
  return out;
}

}  // namespace lowreg::analysis

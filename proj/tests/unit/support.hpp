#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "lowreg/analysis/initial_data.hpp"
#include "lowreg/spectral/field.hpp"

namespace lowreg::testing {

using spectral::cplx;
using spectral::Field;

/// Normalized random field with full spectrum.
inline Field random_field(const spectral::GridPtr& grid, std::uint64_t seed) {
  return analysis::generate_raw_rand(seed, grid, true);
}

/// Random field keeping only modes |k| < max_k.
inline Field band_limited_field(const spectral::GridPtr& grid, std::uint64_t seed, int max_k) {
  auto c = random_field(grid, seed).to_fourier();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (std::abs(grid->wavenumber(i, 0)) >= max_k) c.data()[i] = 0.0;
  }
  return c;
}

/// max_k |a_k - b_k| over Fourier coefficients.
inline double max_deviation(const Field& a, const Field& b) {
  const auto fa = a.to_fourier();
  const auto fb = b.to_fourier();
  double m = 0.0;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    m = std::max(m, std::abs(fa.coefficients()[i] - fb.coefficients()[i]));
  }
  return m;
}

inline Field constant_field(const spectral::GridPtr& grid, cplx value) {
  Field c(grid, spectral::View::Fourier);
  c.data()[0] = value;
  return c.to_physical();
}

inline Field scaled(const Field& f, cplx s) {
  Field out = f;
  for (auto& z : out.data()) z *= s;
  return out;
}

}  // namespace lowreg::testing

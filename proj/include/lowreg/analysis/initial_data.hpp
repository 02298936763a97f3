#pragma once

#include <cstdint>

#include "lowreg/spectral/field.hpp"

namespace lowreg::analysis {

using spectral::Field;
using spectral::GridPtr;

/// Random data with algebraically decaying spectrum: uniform random samples
/// U_j = r_j + i s_j, smoothed by the multiplier |k|^{-theta} (0 at k = 0).
struct RoughDataSpec {
  double theta = 0.0;
  std::uint64_t seed = 1;
  int K = 0;  ///< must equal the grid's K; 0 accepts any grid
  bool normalize = true;
};

/// The 2K raw samples r_j + i s_j with r_j = uniform(j), s_j = uniform(2K + j)
/// drawn from CounterRng(seed). d = 1 only.
Field raw_random_samples(std::uint64_t seed, const GridPtr& grid);

/// Raw random samples, optionally scaled to unit discrete L2 norm. The mean
/// is kept.
Field generate_raw_rand(std::uint64_t seed, const GridPtr& grid, bool normalize = true);

/// |d_x|^{-theta} applied to the raw samples, zero mean, optionally scaled to
/// unit discrete L2 norm (sum_k |c_k|^2 = 1). Returned in Fourier view so
/// that the zero mode is exactly 0.
Field generate_rough_data(const RoughDataSpec& spec, const GridPtr& grid);

enum class SmoothKind {
  SinCos,  ///< sin x cos x, normalized to unit L2 norm
  Sin,     ///< sin x, not normalized
};

/// Exact two-mode smooth data on a d = 1 grid.
Field smooth_data(SmoothKind kind, const GridPtr& grid);

/// A e^{i k x} on a d = 1 grid.
Field plane_wave(const GridPtr& grid, int k, spectral::cplx amplitude);

/// Exact solution of i u_t = -u_xx + mu |u|^{2p} u from a plane wave:
/// A e^{i(k x - omega t)}, omega = k^2 + mu |A|^{2p}.
Field plane_wave_solution(const GridPtr& grid, int k, spectral::cplx amplitude, double mu,
                          double p, double t);

/// Scales f so that sum_k |c_k|^2 = 1. Throws ConfigError for a zero field.
Field normalize_l2(const Field& f);

}  // namespace lowreg::analysis

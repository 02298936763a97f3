#include "lowreg/analysis/initial_data.hpp"

#include <cmath>
#include <string>

#include "lowreg/analysis/norms.hpp"
#include "lowreg/analysis/rng.hpp"
#include "lowreg/error.hpp"

namespace lowreg::analysis {

using spectral::cplx;
using spectral::View;

namespace {

void require_1d(const GridPtr& grid, const char* what) {
  if (grid->dim() != 1) throw ConfigError(std::string(what) + " is defined for d = 1 only");
}

}  // namespace

Field normalize_l2(const Field& f) {
  const double n = std::sqrt(mass(f));
  if (n == 0.0) throw ConfigError("cannot normalize the zero field");
  Field out = f;
  for (auto& z : out.data()) z /= n;
  return out;
}

Field raw_random_samples(std::uint64_t seed, const GridPtr& grid) {
  require_1d(grid, "random initial data");
  const CounterRng rng(seed);
  const std::size_t n = grid->size();
  std::vector<cplx> samples(n);
  for (std::size_t j = 0; j < n; ++j) samples[j] = {rng.uniform(j), rng.uniform(n + j)};
  return Field::samples_of(grid, std::move(samples));
}

Field generate_raw_rand(std::uint64_t seed, const GridPtr& grid, bool normalize) {
  Field u = raw_random_samples(seed, grid);
  return normalize ? normalize_l2(u) : u;
}

Field generate_rough_data(const RoughDataSpec& spec, const GridPtr& grid) {
  if (spec.K != 0 && spec.K != grid->max_mode()) {
    throw ConfigError("rough data spec K = " + std::to_string(spec.K) +
                      " does not match grid K = " + std::to_string(grid->max_mode()));
  }
  if (!(spec.theta >= 0.0)) throw ConfigError("rough data: theta must be >= 0");
  Field c = raw_random_samples(spec.seed, grid).to_fourier();
  const auto kabs = grid->magnitude();
  auto d = c.data();
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = kabs[i] == 0.0 ? cplx(0.0) : d[i] * std::pow(kabs[i], -spec.theta);
  }
  if (spec.normalize) c = normalize_l2(c);
  return c;
}

Field smooth_data(SmoothKind kind, const GridPtr& grid) {
  require_1d(grid, "smooth initial data");
  Field c(grid, View::Fourier);
  switch (kind) {
    case SmoothKind::SinCos:
      if (grid->max_mode() < 4) throw ConfigError("sin x cos x needs K >= 4");
      // sin x cos x = sin(2x) / 2
      c.data()[grid->index_of(2)] = cplx(0.0, -0.25);
      c.data()[grid->index_of(-2)] = cplx(0.0, 0.25);
      return normalize_l2(c).to_physical();
    case SmoothKind::Sin:
      c.data()[grid->index_of(1)] = cplx(0.0, -0.5);
      c.data()[grid->index_of(-1)] = cplx(0.0, 0.5);
      return std::move(c).to_physical();
  }
  throw ConfigError("unknown smooth data kind");
}

Field plane_wave(const GridPtr& grid, int k, cplx amplitude) {
  require_1d(grid, "plane wave");
  Field c(grid, View::Fourier);
  c.data()[grid->index_of(k)] = amplitude;
  return std::move(c).to_physical();
}

Field plane_wave_solution(const GridPtr& grid, int k, cplx amplitude, double mu, double p,
                          double t) {
  const double omega = static_cast<double>(k) * k + mu * std::pow(std::norm(amplitude), p);
  return plane_wave(grid, k, amplitude * std::polar(1.0, -omega * t));
}

}  // namespace lowreg::analysis

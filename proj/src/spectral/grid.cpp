#include "lowreg/spectral/grid.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "lowreg/error.hpp"
#include "lowreg/spectral/transform.hpp"

namespace lowreg::spectral {

TorusGrid::TorusGrid(int dim, int K, int log2_point_budget) : dim_(dim), K_(K) {
  if (dim < 1) throw ConfigError("grid dimension must be >= 1, got " + std::to_string(dim));
  if (K < 2 || !std::has_single_bit(static_cast<unsigned>(K))) {
    throw ConfigError("largest mode K must be a power of two >= 2, got " + std::to_string(K));
  }
  const int log2_points = dim * (std::countr_zero(static_cast<unsigned>(K)) + 1);
  if (log2_points > log2_point_budget) {
    throw ConfigError("grid with " + std::to_string(dim) + " axes of " +
                      std::to_string(2 * K) + " points exceeds the memory budget of 2^" +
                      std::to_string(log2_point_budget) + " points");
  }

  const int n = 2 * K;
  axis_k_.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) axis_k_[static_cast<std::size_t>(j)] = j < K ? j : j - n;

  size_ = std::size_t{1} << log2_points;
  k2_.resize(size_);
  laplacian_.resize(size_);
  kabs_.resize(size_);
  std::vector<double> sign(size_);
  for (std::size_t idx = 0; idx < size_; ++idx) {
    long k2 = 0;
    long ksum = 0;
    std::size_t rest = idx;
    for (int a = dim - 1; a >= 0; --a) {
      const long k = axis_k_[rest % static_cast<std::size_t>(n)];
      rest /= static_cast<std::size_t>(n);
      k2 += k * k;
      ksum += k;
    }
    k2_[idx] = k2;
    laplacian_[idx] = -static_cast<double>(k2);
    kabs_[idx] = std::sqrt(static_cast<double>(k2));
    sign[idx] = (ksum % 2 == 0) ? 1.0 : -1.0;
  }
  transform_ = std::make_unique<FourierTransform>(dim, n, std::move(sign));
}

TorusGrid::~TorusGrid() = default;

int TorusGrid::wavenumber(std::size_t idx, int axis) const {
  const auto n = static_cast<std::size_t>(2 * K_);
  for (int a = dim_ - 1; a > axis; --a) idx /= n;
  return axis_k_[idx % n];
}

std::vector<int> TorusGrid::multi_index(std::size_t idx) const {
  std::vector<int> k(static_cast<std::size_t>(dim_));
  const auto n = static_cast<std::size_t>(2 * K_);
  for (int a = dim_ - 1; a >= 0; --a) {
    k[static_cast<std::size_t>(a)] = axis_k_[idx % n];
    idx /= n;
  }
  return k;
}

std::size_t TorusGrid::index_of(std::span<const int> k) const {
  if (static_cast<int>(k.size()) != dim_) {
    throw ConfigError("multi-index has " + std::to_string(k.size()) +
                      " components, grid has dimension " + std::to_string(dim_));
  }
  const auto n = static_cast<std::size_t>(2 * K_);
  std::size_t idx = 0;
  for (int ka : k) {
    if (ka < -K_ || ka >= K_) {
      throw ConfigError("wavenumber " + std::to_string(ka) + " outside [-K, K-1]");
    }
    idx = idx * n + static_cast<std::size_t>(ka >= 0 ? ka : ka + 2 * K_);
  }
  return idx;
}

std::size_t TorusGrid::index_of(int k) const {
  return index_of(std::span<const int>(&k, 1));
}

int TorusGrid::wrap(long k) const noexcept {
  const long n = 2L * K_;
  long r = ((k + K_) % n + n) % n;
  return static_cast<int>(r - K_);
}

double TorusGrid::coordinate(int j) const noexcept {
  return (-1.0 + static_cast<double>(j) / K_) * std::numbers::pi;
}

GridPtr make_grid(int dim, int K, int log2_point_budget) {
  return std::make_shared<const TorusGrid>(dim, K, log2_point_budget);
}

}  // namespace lowreg::spectral

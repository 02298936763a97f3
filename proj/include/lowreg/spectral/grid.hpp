#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace lowreg::spectral {

using cplx = std::complex<double>;

class FourierTransform;

/// Upper bound on dim * log2(2K), i.e. log2 of the total number of grid
/// points. 2^26 complex doubles is 1 GiB per field.
inline constexpr int kDefaultLog2PointBudget = 26;

/// Periodic tensor grid on the d-dimensional torus [-pi, pi)^d.
///
/// Each axis carries 2K equispaced points x_j = (-1 + j/K) pi, j = 0..2K-1,
/// and the wavenumbers {-K, ..., K-1} stored in FFT order
/// {0, 1, ..., K-1, -K, ..., -1}. Flat indices are row-major over the axes.
/// All tables are built once in the constructor and never change.
class TorusGrid {
 public:
  TorusGrid(int dim, int K, int log2_point_budget = kDefaultLog2PointBudget);
  ~TorusGrid();

  TorusGrid(const TorusGrid&) = delete;
  TorusGrid& operator=(const TorusGrid&) = delete;

  int dim() const noexcept { return dim_; }
  int max_mode() const noexcept { return K_; }
  int modes_per_axis() const noexcept { return 2 * K_; }
  std::size_t size() const noexcept { return size_; }

  /// Wavenumbers of one axis in storage order.
  std::span<const int> axis_wavenumbers() const noexcept { return axis_k_; }
  /// Wavenumber along `axis` of the mode stored at flat index `idx`.
  int wavenumber(std::size_t idx, int axis) const;
  /// Multi-index of the mode stored at flat index `idx`.
  std::vector<int> multi_index(std::size_t idx) const;

  /// Flat index of a multi-index; each component must lie in [-K, K-1].
  std::size_t index_of(std::span<const int> k) const;
  /// Shorthand for d = 1.
  std::size_t index_of(int k) const;

  /// Folds an arbitrary integer wavenumber into [-K, K-1] (aliasing).
  int wrap(long k) const noexcept;

  /// -|k|^2 per flat index, exact integer value converted to double.
  std::span<const double> laplacian_symbol() const noexcept { return laplacian_; }
  /// |k|^2 per flat index as an integer.
  std::span<const long> squared_magnitude() const noexcept { return k2_; }
  /// Euclidean |k| per flat index.
  std::span<const double> magnitude() const noexcept { return kabs_; }

  /// Physical coordinate of sample j along one axis.
  double coordinate(int j) const noexcept;

  bool same_shape(const TorusGrid& other) const noexcept {
    return dim_ == other.dim_ && K_ == other.K_;
  }

  const FourierTransform& transform() const noexcept { return *transform_; }

 private:
  int dim_;
  int K_;
  std::size_t size_;
  std::vector<int> axis_k_;
  std::vector<long> k2_;
  std::vector<double> laplacian_;
  std::vector<double> kabs_;
  std::unique_ptr<FourierTransform> transform_;
};

using GridPtr = std::shared_ptr<const TorusGrid>;

/// Validates (dim, K) and builds a shareable grid.
/// Throws ConfigError if dim < 1, K < 2, K is not a power of two, or the
/// grid exceeds the point budget.
GridPtr make_grid(int dim, int K, int log2_point_budget = kDefaultLog2PointBudget);

}  // namespace lowreg::spectral

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "lowreg/spectral/grid.hpp"

namespace lowreg::spectral {

/// Which representation of a Field is authoritative.
enum class View { Physical, Fourier };

/// Complex-valued state on a TorusGrid.
///
/// A Field stores exactly one representation, either point samples u(x_j)
/// or Fourier coefficients c_k (in the grid's FFT storage order), and records
/// which one in view(). Conversions return new Fields and never modify the
/// source; the rvalue overloads reuse the buffer of an expiring Field.
class Field {
 public:
  Field(GridPtr grid, View view);
  Field(GridPtr grid, View view, std::vector<cplx> data);

  static Field samples_of(GridPtr grid, std::vector<cplx> samples) {
    return Field(std::move(grid), View::Physical, std::move(samples));
  }
  static Field coefficients_of(GridPtr grid, std::vector<cplx> coefficients) {
    return Field(std::move(grid), View::Fourier, std::move(coefficients));
  }

  const TorusGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  View view() const noexcept { return view_; }
  std::size_t size() const noexcept { return data_.size(); }

  /// Raw storage of whichever view is current.
  std::span<const cplx> data() const noexcept { return data_; }
  std::span<cplx> data() noexcept { return data_; }

  /// Checked access to a specific view; throws std::logic_error otherwise.
  std::span<const cplx> samples() const;
  std::span<const cplx> coefficients() const;

  /// Coefficient at a multi-index (converts if necessary).
  cplx coefficient(std::span<const int> k) const;
  cplx coefficient(int k) const;

  Field to_fourier() const&;
  Field to_fourier() &&;
  Field to_physical() const&;
  Field to_physical() &&;

  /// Throws GridMismatchError unless both fields live on grids of equal shape.
  void require_same_grid(const Field& other) const;

 private:
  GridPtr grid_;
  View view_;
  std::vector<cplx> data_;
};

}  // namespace lowreg::spectral

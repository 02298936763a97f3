#pragma once

#include <complex>
#include <string>
#include <vector>

#include "lowreg/spectral/field.hpp"
#include "lowreg/spectral/grid.hpp"

namespace lowreg::spectral {

/// Fourier multiplier: an operator acting diagonally, (M u)_k = m_k u_k.
class Multiplier {
 public:
  Multiplier(GridPtr grid, std::vector<cplx> symbol, std::string label);

  const TorusGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::span<const cplx> symbol() const noexcept { return symbol_; }
  const std::string& label() const noexcept { return label_; }

  /// Pointwise product of symbols; both multipliers must share a grid shape.
  Multiplier then(const Multiplier& next) const;

 private:
  GridPtr grid_;
  std::vector<cplx> symbol_;
  std::string label_;
};

/// phi_1(z) = (e^z - 1) / z with phi_1(0) = 1.
/// Uses a four-term Taylor series for |z| < 1e-8 and a cancellation-free
/// expm1 form elsewhere.
cplx phi1(cplx z);

/// Identity multiplier.
Multiplier identity(const GridPtr& grid);

/// Free Schroedinger group exp(i t Laplacian): symbol exp(-i t |k|^2).
Multiplier free_flow(const GridPtr& grid, double t);

/// phi_1(c Laplacian): symbol phi_1(-c |k|^2), exactly 1 at k = 0.
Multiplier phi1_of_scaled_laplacian(const GridPtr& grid, cplx c);

/// Regularized inverse derivative along `axis`: 1/(i k_axis), and 0 where
/// k_axis = 0.
Multiplier inverse_derivative(const GridPtr& grid, int axis = 0);

/// Applies a multiplier; the result is in Fourier view.
Field apply(const Multiplier& m, const Field& f);
Field apply(const Multiplier& m, Field&& f);

}  // namespace lowreg::spectral

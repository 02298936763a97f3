#pragma once

#include <complex>
#include <span>
#include <vector>

namespace lowreg::spectral {

/// Forward/backward discrete Fourier transform on one TorusGrid, backed by
/// FFTW plans created once and executed on caller-provided arrays.
///
/// Convention: u(x_j) = sum_k c_k exp(i k . x_j), so forward() divides by the
/// number of points. The grid offset x_0 = -pi is folded into a per-mode sign
/// (-1)^(k_1 + ... + k_d).
///
/// Execution is thread-safe; plan creation is serialized internally.
class FourierTransform {
 public:
  FourierTransform(int dim, int points_per_axis, std::vector<double> mode_sign);
  ~FourierTransform();

  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;

  /// samples -> coefficients. `in` and `out` must not alias.
  void forward(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out) const;
  /// coefficients -> samples. `in` and `out` must not alias.
  void backward(std::span<const std::complex<double>> in,
                std::span<std::complex<double>> out) const;

 private:
  struct Plans;
  std::size_t size_;
  std::vector<double> sign_;
  Plans* plans_;
};

}  // namespace lowreg::spectral

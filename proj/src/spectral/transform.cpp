#include "lowreg/spectral/transform.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace lowreg::spectral {

namespace {

// FFTW's planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) {
  return reinterpret_cast<fftw_complex*>(p);
}

}  // namespace

struct FourierTransform::Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

FourierTransform::FourierTransform(int dim, int points_per_axis,
                                   std::vector<double> mode_sign)
    : size_(mode_sign.size()), sign_(std::move(mode_sign)), plans_(new Plans) {
  std::vector<int> n(static_cast<std::size_t>(dim), points_per_axis);
  std::vector<std::complex<double>> a(size_), b(size_);
  // FFTW_ESTIMATE keeps plans (and therefore results) independent of timing.
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::lock_guard lock(planner_mutex());
  plans_->forward = fftw_plan_dft(dim, n.data(), as_fftw(a.data()), as_fftw(b.data()),
                                  FFTW_FORWARD, flags);
  plans_->backward = fftw_plan_dft(dim, n.data(), as_fftw(a.data()), as_fftw(b.data()),
                                   FFTW_BACKWARD, flags);
  if (plans_->forward == nullptr || plans_->backward == nullptr) {
    delete plans_;
    throw std::runtime_error("FFTW plan creation failed");
  }
}

FourierTransform::~FourierTransform() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plans_->forward);
  fftw_destroy_plan(plans_->backward);
  delete plans_;
}

void FourierTransform::forward(std::span<const std::complex<double>> in,
                               std::span<std::complex<double>> out) const {
  // FFTW never writes to the input of an out-of-place complex transform.
  fftw_execute_dft(plans_->forward, as_fftw(const_cast<std::complex<double>*>(in.data())),
                   as_fftw(out.data()));
  const double inv_n = 1.0 / static_cast<double>(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] *= sign_[i] * inv_n;
}

void FourierTransform::backward(std::span<const std::complex<double>> in,
                                std::span<std::complex<double>> out) const {
  std::vector<std::complex<double>> signed_in(size_);
  for (std::size_t i = 0; i < size_; ++i) signed_in[i] = in[i] * sign_[i];
  fftw_execute_dft(plans_->backward, as_fftw(signed_in.data()), as_fftw(out.data()));
}

}  // namespace lowreg::spectral

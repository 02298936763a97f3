#include "lowreg/spectral/field.hpp"

#include <stdexcept>
#include <string>

#include "lowreg/error.hpp"
#include "lowreg/spectral/transform.hpp"

namespace lowreg::spectral {

Field::Field(GridPtr grid, View view)
    : grid_(std::move(grid)), view_(view), data_(grid_->size()) {}

Field::Field(GridPtr grid, View view, std::vector<cplx> data)
    : grid_(std::move(grid)), view_(view), data_(std::move(data)) {
  if (data_.size() != grid_->size()) {
    throw GridMismatchError("field data has " + std::to_string(data_.size()) +
                            " entries, grid has " + std::to_string(grid_->size()));
  }
}

std::span<const cplx> Field::samples() const {
  if (view_ != View::Physical) throw std::logic_error("field is not in physical view");
  return data_;
}

std::span<const cplx> Field::coefficients() const {
  if (view_ != View::Fourier) throw std::logic_error("field is not in Fourier view");
  return data_;
}

cplx Field::coefficient(std::span<const int> k) const {
  const std::size_t idx = grid_->index_of(k);
  if (view_ == View::Fourier) return data_[idx];
  return to_fourier().data_[idx];
}

cplx Field::coefficient(int k) const { return coefficient(std::span<const int>(&k, 1)); }

Field Field::to_fourier() const& {
  if (view_ == View::Fourier) return *this;
  Field out(grid_, View::Fourier);
  grid_->transform().forward(data_, out.data_);
  return out;
}

Field Field::to_fourier() && {
  if (view_ == View::Fourier) return std::move(*this);
  return static_cast<const Field&>(*this).to_fourier();
}

Field Field::to_physical() const& {
  if (view_ == View::Physical) return *this;
  Field out(grid_, View::Physical);
  grid_->transform().backward(data_, out.data_);
  return out;
}

Field Field::to_physical() && {
  if (view_ == View::Physical) return std::move(*this);
  return static_cast<const Field&>(*this).to_physical();
}

void Field::require_same_grid(const Field& other) const {
  if (grid_ != other.grid_ && !grid_->same_shape(*other.grid_)) {
    throw GridMismatchError("fields live on different grids");
  }
}

}  // namespace lowreg::spectral

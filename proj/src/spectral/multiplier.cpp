#include "lowreg/spectral/multiplier.hpp"

#include <cmath>
#include <sstream>

#include "lowreg/error.hpp"

namespace lowreg::spectral {

namespace {

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// e^z - 1 without cancellation for small |z|.
cplx expm1(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

}  // namespace

Multiplier::Multiplier(GridPtr grid, std::vector<cplx> symbol, std::string label)
    : grid_(std::move(grid)), symbol_(std::move(symbol)), label_(std::move(label)) {
  if (symbol_.size() != grid_->size()) {
    throw GridMismatchError("multiplier symbol size does not match grid");
  }
}

Multiplier Multiplier::then(const Multiplier& next) const {
  if (!grid_->same_shape(next.grid())) throw GridMismatchError("multipliers on different grids");
  std::vector<cplx> s(symbol_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = symbol_[i] * next.symbol_[i];
  return Multiplier(grid_, std::move(s), next.label_ + " * " + label_);
}

cplx phi1(cplx z) {
  if (std::abs(z) < 1e-8) return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
  return expm1(z) / z;
}

Multiplier identity(const GridPtr& grid) {
  return Multiplier(grid, std::vector<cplx>(grid->size(), 1.0), "identity");
}

Multiplier free_flow(const GridPtr& grid, double t) {
  if (!std::isfinite(t)) throw ConfigError("free_flow: non-finite time");
  const auto k2 = grid->squared_magnitude();
  std::vector<cplx> s(grid->size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = std::polar(1.0, -t * static_cast<double>(k2[i]));
  }
  return Multiplier(grid, std::move(s), "free_flow(" + format_number(t) + ")");
}

Multiplier phi1_of_scaled_laplacian(const GridPtr& grid, cplx c) {
  const auto k2 = grid->squared_magnitude();
  std::vector<cplx> s(grid->size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = k2[i] == 0 ? cplx(1.0) : phi1(-c * static_cast<double>(k2[i]));
  }
  std::ostringstream label;
  label << "phi1((" << format_number(c.real()) << (c.imag() < 0 ? "-" : "+")
        << format_number(std::abs(c.imag())) << "i) Laplacian)";
  return Multiplier(grid, std::move(s), label.str());
}

Multiplier inverse_derivative(const GridPtr& grid, int axis) {
  if (axis < 0 || axis >= grid->dim()) {
    throw ConfigError("inverse_derivative: axis " + std::to_string(axis) + " out of range");
  }
  std::vector<cplx> s(grid->size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int k = grid->wavenumber(i, axis);
    s[i] = k == 0 ? cplx(0.0) : 1.0 / cplx(0.0, static_cast<double>(k));
  }
  return Multiplier(grid, std::move(s), "inverse_derivative(" + std::to_string(axis) + ")");
}

Field apply(const Multiplier& m, Field&& f) {
  if (!m.grid().same_shape(f.grid())) throw GridMismatchError("multiplier and field grids differ");
  Field out = std::move(f).to_fourier();
  auto c = out.data();
  const auto s = m.symbol();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= s[i];
  return out;
}

Field apply(const Multiplier& m, const Field& f) { return apply(m, Field(f)); }

}  // namespace lowreg::spectral

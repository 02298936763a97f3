#include "lowreg/analysis/norms.hpp"

#include <cmath>

#include "lowreg/error.hpp"

namespace lowreg::analysis {

double h_r_norm(const Field& f, double r) {
  if (!(r >= 0.0)) throw ConfigError("h_r_norm: r must be >= 0");
  const Field c = f.to_fourier();
  const auto kabs = f.grid().magnitude();
  const auto d = c.data();
  double sum = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double w = r == 0.0 ? 1.0 : std::pow(1.0 + kabs[i], 2.0 * r);
    sum += w * std::norm(d[i]);
  }
  return std::sqrt(sum);
}

double h_r_distance(const Field& a, const Field& b, double r) {
  a.require_same_grid(b);
  Field diff = a.to_fourier();
  const Field bc = b.to_fourier();
  auto d = diff.data();
  const auto bd = bc.data();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= bd[i];
  return h_r_norm(diff, r);
}

double mass(const Field& f) {
  const Field c = f.to_fourier();
  double sum = 0.0;
  for (const auto& z : c.data()) sum += std::norm(z);
  return sum;
}

}  // namespace lowreg::analysis

#pragma once

#include "lowreg/spectral/field.hpp"

namespace lowreg::analysis {

using spectral::Field;

/// Discrete Sobolev norm sqrt(sum_k (1 + |k|)^{2r} |c_k|^2), |k| Euclidean.
/// Throws ConfigError for r < 0.
double h_r_norm(const Field& f, double r);

/// h_r_norm(a - b, r); the fields must share a grid shape.
double h_r_distance(const Field& a, const Field& b, double r);

/// sum_k |c_k|^2 (equals the mean of |u(x_j)|^2 over the samples).
double mass(const Field& f);

}  // namespace lowreg::analysis

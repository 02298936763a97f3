#pragma once

#include "lowreg/spectral/field.hpp"

namespace lowreg::analysis {

using spectral::Field;

/// Brute-force Fourier-space evaluations of the Duhamel integrals behind the
/// schemes, used to check the pseudospectral implementations.
///
/// All sums run over every mode tuple of the grid; output wavenumbers are
/// folded back into [-K, K-1] exactly as the pseudospectral product aliases
/// them, and phases use the folded wavenumber. With band-limited inputs no
/// folding occurs and the sums are the continuous ones. d = 1 only.

/// Largest K accepted by the O(K^3) cubic oracles.
inline constexpr int kCubicOracleMaxK = 16;
/// Largest K accepted by the O(K^2) quadratic oracle.
inline constexpr int kQuadOracleMaxK = 64;

/// Exact value of
///   I(w, t_n) = int_0^tau e^{-i(t_n+s)L}[ (e^{-i(t_n+s)L} conj w)(e^{i(t_n+s)L} w)^2 ] ds,
/// mode by mode: sum over l = -k1 + k2 + k3 of
///   e^{i t_n w} tau phi_1(i w tau) conj(c_k1) c_k2 c_k3,  w = l^2 + k1^2 - k2^2 - k3^2.
Field oracle_cubic_integral(const Field& w, double t_n, double tau);

/// Dominant-term approximation of the same integral, where only the 2 k1^2
/// part of the phase is integrated exactly:
///   sum e^{i t_n w} tau phi_1(2 i tau k1^2) conj(c_k1) c_k2 c_k3.
Field oracle_cubic_dominant(const Field& w, double t_n, double tau);

/// Exact value of int_0^tau e^{-i(t_n+s)L} N(e^{i(t_n+s)L} w) ds for
/// N(u) = u^2 (conjugated = false) or N(u) = |u|^2 (conjugated = true).
Field oracle_quad_integral(const Field& w, double t_n, double tau, bool conjugated);

}  // namespace lowreg::analysis

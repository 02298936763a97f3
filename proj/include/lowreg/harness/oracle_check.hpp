#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lowreg::harness {

struct OracleDeviation {
  std::string name;
  double max_deviation = 0.0;  ///< max over Fourier coefficients
  double tolerance = 0.0;
  bool passed() const { return max_deviation <= tolerance; }
};

/// Compares single pseudospectral steps against the brute-force Fourier sums
/// on a d = 1 grid of half-size K with seeded random data:
///   - LowRegExp (p = 1) at t_n = 0 and t_n = 0.37 against the cubic sum,
///   - QuadU2 and QuadAbsU2 against the quadratic sums on band-limited data
///     (|k| < K/2, so no aliasing occurs).
/// Throws ConfigError if K exceeds the oracle limits.
std::vector<OracleDeviation> run_oracle_check(int K = 8, std::uint64_t seed = 7);

}  // namespace lowreg::harness

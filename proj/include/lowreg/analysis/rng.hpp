#pragma once

#include <cstdint>

namespace lowreg::analysis {

/// Stateless counter-based generator built on the SplitMix64 finalizer.
///
/// Draw i of stream `seed` is
///   z  = seed + (i + 1) * 0x9E3779B97F4A7C15     (mod 2^64)
///   z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
///   z ^= z >> 27;  z *= 0x94D049BB133111EB
///   z ^= z >> 31
/// and uniform(i) = (z >> 11) * 2^-53 lies in [0, 1). Only 64-bit unsigned
/// arithmetic is involved, so streams are identical on every platform and
/// any draw can be computed independently of the others.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  constexpr std::uint64_t bits(std::uint64_t i) const noexcept {
    std::uint64_t z = seed_ + (i + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr double uniform(std::uint64_t i) const noexcept {
    return static_cast<double>(bits(i) >> 11) * 0x1.0p-53;
  }

  constexpr std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

}  // namespace lowreg::analysis

#pragma once

#include <cstdint>
#include <random>

namespace frq {

/// Seeded random source. All draws go through the raw 64-bit stream (which
/// the standard pins down exactly for mt19937_64) rather than through
/// distribution objects, so seeded runs reproduce bit for bit across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  /// Uniform double in [lo, hi) from the top 53 bits.
  double uniform(double lo, double hi) {
    double unit = static_cast<double>(bits() >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
  }

  /// Uniform integer in [lo, hi]. Modulo bias is irrelevant at the ranges
  /// used here (spans far below 2^32).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(bits() % span);
  }

  bool coin() { return (bits() & 1) != 0; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace frq

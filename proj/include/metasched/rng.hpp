#pragma once

#include <cstdint>
#include <random>

namespace metasched {

/// Explicitly seeded generator. The bounded draws are written out here
/// rather than taken from <random> distributions, whose output is
/// implementation-defined, so a seed reproduces the same run on every
/// standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection sampling on the top of the range keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do { x = engine_(); } while (x >= limit);
    return x % bound;
  }

  std::size_t index(std::size_t size) { return static_cast<std::size_t>(below(size)); }

  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return uniform() < p; }

private:
  std::mt19937_64 engine_;
};

}  // namespace metasched

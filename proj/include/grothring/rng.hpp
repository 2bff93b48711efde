#pragma once

#include <cstdint>
#include <random>

namespace grothring {

/// Seeded 64-bit LCG (modulus 2^64). Range reduction is done by hand from the
/// high bits so sampled values are identical on every standard library.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return (next() >> 32) % bound; }

  /// Integer in the closed range [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                  1442695040888963407ULL, 0ULL>
      engine_;
};

}  // namespace grothring

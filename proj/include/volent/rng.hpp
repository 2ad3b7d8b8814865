#pragma once

#include <cstdint>

namespace volent {

/// SplitMix64 (Steele-Lea-Flood).  Counter-based 64-bit generator used for
/// every random quantity in the project so that results are reproducible
/// bit-for-bit across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // modulo bias is below 2^-50 for the bounds used here
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  // uniform in [0, 1)
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Derives an independent stream, e.g. one per trial.
  static std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace volent

#pragma once

#include <cstdint>

namespace ssaw {

// SplitMix64. Fully specified output sequence, so seeded runs are
// bit-reproducible across platforms (std distributions are not).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform in [-radius, radius).
  double symmetric(double radius) { return radius * (2.0 * uniform01() - 1.0); }

 private:
  std::uint64_t state_;
};

// Order-insensitive stream derivation: one master seed fans out into
// independent per-purpose streams.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  SplitMix64 rng(a ^ (0x9E3779B97F4A7C15ULL + (b << 6) + (b >> 2)));
  rng.next();
  return rng.next() ^ b;
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix_seed(mix_seed(a, b), c);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                              std::uint64_t d) {
  return mix_seed(mix_seed(a, b, c), d);
}

}  // namespace ssaw

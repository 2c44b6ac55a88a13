#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fairstream {

/// Deterministic pseudo-random source. Wraps std::mt19937_64 but draws
/// bounded integers and unit reals through fixed reduction schemes, so the
/// produced sequences depend only on the seed, never on the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent child generator; `stream` tags the consumer (e.g. a group id).
  Rng derive(std::uint64_t stream) const {
    return Rng(mix(seed_of(engine_), stream));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound); bound > 0. Unbiased via rejection.
  std::uint64_t bounded(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform real in [0, 1) with 53 random bits.
  double unit_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  explicit Rng(std::mt19937_64 engine) : engine_(engine) {}

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    // splitmix64 finalizer over the combined words.
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t seed_of(std::mt19937_64 engine) { return engine(); }

  std::mt19937_64 engine_;
};

}  // namespace fairstream

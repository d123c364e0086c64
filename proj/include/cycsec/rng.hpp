#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cycsec {

/// Seeded RNG wrapper with stable bounded sampling. Distribution classes in
/// <random> are implementation defined, so sampling is done by hand to keep
/// fixtures and golden files byte reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, n).
  std::size_t next_index(std::size_t n) {
    // Lemire-style rejection-free bound would bias slightly; rejection keeps
    // the draw exact.
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return static_cast<std::size_t>(v % n);
  }

  /// Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[next_index(i)]);
    }
  }

  /// Deterministic sub-seed for a nested component.
  std::uint64_t fork() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Stable hash mix for deriving per-task seeds from a base seed.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = a + 0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

}  // namespace cycsec

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qv {

/**
 * Deterministic random source. Bounded sampling is done by hand (rejection
 * on the top of a 64-bit draw) so that streams are identical across
 * standard library implementations.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t u64() { return engine_(); }

  /** Uniform draw from [0, n); n must be positive. */
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    for (;;) {
      std::uint64_t x = u64();
      if (x < limit) return x % n;
    }
  }

  bool coin() { return (u64() >> 63) != 0; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qv

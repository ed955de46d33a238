#pragma once

#include <cstdint>
#include <random>

namespace tangles {

// Deterministic random source. mt19937_64 output is pinned by the standard;
// the bounded draw below avoids std::uniform_int_distribution, whose results
// differ between standard library implementations. Same seed, same stream,
// on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Derive an independent stream for case `index` of a seeded suite.
  static Rng for_case(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    // splitmix64 finalizer
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    x = x ^ (x >> 31);
    return Rng(x);
  }

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, bound), bound >= 1. Rejection sampling, unbiased.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform in [lo, hi] inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (eng_() >> 63) != 0; }

  int sign() { return coin() ? 1 : -1; }

private:
  std::mt19937_64 eng_;
};

} // namespace tangles

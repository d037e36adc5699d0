#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace lapspread {

/// Reproducible random stream: std::mt19937_64 (bit-exact across
/// standard libraries) seeded through splitmix64, with doubles built
/// from the top 53 bits rather than std::uniform_real_distribution.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64+splitmix64";

  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Independent stream number `index` of `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    // Rejection keeps the result exactly uniform and platform independent.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do v = engine_();
    while (v >= limit);
    return v % bound;
  }

  bool coin() { return engine_() >> 63; }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lapspread

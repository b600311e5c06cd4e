#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace plvo {

// Deterministic RNG used everywhere seeds matter. Distribution sampling is
// hand-rolled on top of mt19937_64 so that streams are reproducible across
// standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; draws two uniforms per call.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double normal(double sigma) { return sigma > 0.0 ? sigma * normal() : 0.0; }

  // Uniform integer in [0, n).
  std::uint64_t index(std::uint64_t n) {
    return n == 0 ? 0 : engine_() % n;
  }

  bool bernoulli(double p) { return uniform() < p; }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 hash, used to derive independent substream seeds.
inline std::uint64_t hash_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = hash_seed(base ^ 0xd1b54a32d192ed03ULL);
  s = hash_seed(s ^ a);
  s = hash_seed(s ^ (b + 0x2545f4914f6cdd1dULL));
  s = hash_seed(s ^ (c + 0x9e3779b97f4a7c15ULL));
  return s;
}

}  // namespace plvo

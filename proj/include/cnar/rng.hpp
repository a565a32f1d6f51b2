#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>

namespace cnar {

// SplitMix64 step (Steele, Lea, Flood 2014). Used only to mix seed paths.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic random source. Every random quantity in the library flows
// through this class; normals are produced by Box-Muller on raw 53-bit
// uniforms instead of std::normal_distribution, so identical seeds give
// identical streams regardless of the standard library in use.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  // Derive an independent seed from (seed, path...). Counter-based: callers
  // split a master seed per replication / per cache key without sharing
  // generator state, so parallel work cannot reorder draws.
  static std::uint64_t derive(std::uint64_t seed,
                              std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = splitmix64(seed);
    for (std::uint64_t p : path) s = splitmix64(s ^ splitmix64(p));
    return s;
  }

  static Rng from_path(std::uint64_t seed,
                       std::initializer_list<std::uint64_t> path) {
    return Rng(derive(seed, path));
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; the paired draw is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // Uniform integer on [lo, hi] inclusive. Modulo bias is irrelevant at the
  // span sizes used here (node indices, small counts).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace cnar

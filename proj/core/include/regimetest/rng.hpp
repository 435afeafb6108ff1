#pragma once

#include <cstdint>
#include <random>

#include "regimetest/types.hpp"

namespace regimetest {

// splitmix64 finalizer; used to turn (seed, index) pairs into well-spread
// engine seeds so replication i's stream never depends on scheduling.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

// Per-call RNG. Never global; every operation that draws owns one of these,
// seeded explicitly, so results are reproducible across runs and threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(derive_stream(seed, stream)) {}

  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return normal_(engine_); }

  // Index in [0, probs.size()) drawn proportionally to probs (need not be
  // normalized exactly; walks the CDF).
  int categorical(const Vec& probs) {
    const double u = uniform() * probs.sum();
    double cum = 0.0;
    for (Eigen::Index k = 0; k < probs.size(); ++k) {
      cum += probs[k];
      if (u <= cum) return static_cast<int>(k);
    }
    return static_cast<int>(probs.size() - 1);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace regimetest

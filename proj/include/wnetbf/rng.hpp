// rng.hpp
// Deterministic random streams. SplitMix64 core so results do not depend on
// the standard library's distribution implementations.
#pragma once

#include <cmath>
#include <cstdint>

namespace wnetbf {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // in [0, 1)
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t next_below(std::uint64_t n) { return n ? next_u64() % n : 0; }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double k = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * k;
    have_spare_ = true;
    return u * k;
  }

  double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Independent substream for (seed, tag); used to keep per-utterance streams
// stable no matter how work is distributed across workers.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
  return mix.next_u64();
}

}  // namespace wnetbf

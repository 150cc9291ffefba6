#pragma once

#include <cmath>
#include <cstdint>

namespace fwgan {

// Named random streams. Every draw is a pure function of
// (seed, stream, step, draw index), so resuming at step k replays the exact
// sequence and worker scheduling cannot perturb the training stream.
enum class RngStream : uint64_t {
  kInit = 1,
  kDataset = 2,
  kShuffle = 3,
  kPrior = 4,
  kReparam = 5,
  kSwd = 6,
  kCorpus = 7,
  kEval = 8,
  kGeneric = 9,
};

// Counter-based generator (splitmix64 over a mixed key).
class Rng {
 public:
  Rng(uint64_t seed, RngStream stream, uint64_t step = 0)
      : state_(mix(mix(mix(0x9e3779b97f4a7c15ULL ^ seed, seed),
                       static_cast<uint64_t>(stream)),
                   step)) {}

  explicit Rng(uint64_t raw_key) : state_(raw_key) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1); never returns exactly 0 is NOT guaranteed here,
  // use open_double() where log() is applied.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1].
  double open_double() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  float uniform(float lo, float hi) {
    return lo + static_cast<float>(next_double()) * (hi - lo);
  }

  // Box-Muller; caches the second variate.
  float normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = open_double();
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    cached_ = static_cast<float>(r * std::sin(a));
    has_cached_ = true;
    return static_cast<float>(r * std::cos(a));
  }

  // Uniform integer in [0, n).
  int uniform_int(int n) {
    return static_cast<int>(next_u64() % static_cast<uint64_t>(n));
  }

  static uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t state_;
  bool has_cached_ = false;
  float cached_ = 0.0f;
};

}  // namespace fwgan

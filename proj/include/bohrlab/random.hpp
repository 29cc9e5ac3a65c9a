#pragma once

// Per-trial random streams. Each trial derives its generator from
// (seed, trial) alone, so results do not depend on trial scheduling. The
// conversions below avoid the std distributions, whose output is
// implementation-defined.

#include <complex>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace bohrlab {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial)
      : engine_(splitmix64(splitmix64(seed) ^ (trial * 0xD1B54A32D192ED03ULL))) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform on {lo, ..., hi}.
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Uniform in the disk of the given radius.
  std::complex<double> in_disk(double radius) {
    const double rho = radius * std::sqrt(uniform());
    return std::polar(rho, uniform(0.0, 2.0 * std::numbers::pi));
  }

  std::complex<double> on_circle() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bohrlab

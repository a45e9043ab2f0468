#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace csradar {

// Deterministic seed derivation and sampling primitives. Everything here is
// a pure function of the seed values: mt19937_64 is fully specified by the
// standard and the uniform/Gaussian transforms below avoid the
// implementation-defined std::*_distribution classes, so identical seeds give
// bit-identical streams on every platform.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stable 64-bit hash of a seed plus any number of integer tags.
template <typename... Tags>
std::uint64_t derive_seed(std::uint64_t base, Tags... tags) {
  std::uint64_t h = splitmix64(base);
  ((h = splitmix64(h ^ splitmix64(static_cast<std::uint64_t>(tags)))), ...);
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0, 1]; safe as a log() argument.
  double uniform01_open_low() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound) by rejection; exact, no modulo bias.
  std::uint64_t bounded(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Standard complex Gaussian: real and imaginary parts independent,
  /// each with variance 1/2 (unit total variance). Box-Muller pair.
  std::complex<double> complex_normal() {
    const double u1 = uniform01_open_low();
    const double u2 = uniform01();
    const double radius = std::sqrt(-std::log(u1));  // sqrt(-2 ln u)/sqrt(2)
    const double angle = 2.0 * pi() * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

  static constexpr double pi() { return 3.141592653589793238462643383279502884; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace csradar

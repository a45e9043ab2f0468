#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "csradar/complex_vector.hpp"
#include "csradar/primes.hpp"
#include "csradar/rng.hpp"

namespace csradar {

/// Width (in grid cells) giving the Gaussian-pulse matched-filter blob a
/// delay-axis FWHM of about 7 cells at N = 47. Calibrated once; see
/// footprint_width in classical.hpp.
inline constexpr double kDefaultGaussianPulseWidth = 2.1;

/// Alltop sequence: entry n = (1/sqrt(N)) * exp(2*pi*i*n^3 / N), N prime >= 5.
/// Unit l2 norm by construction.
inline ComplexVector alltop_sequence(std::int64_t n) {
  if (n < 5 || !is_prime(n)) {
    throw std::invalid_argument("alltop_sequence: N must be a prime >= 5");
  }
  ComplexVector f(static_cast<std::size_t>(n));
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    // n^3 mod N via staged products so intermediates stay below 2^63
    const std::int64_t cubic = ((i * i) % n * i) % n;
    const double phase = 2.0 * Rng::pi() * static_cast<double>(cubic) / static_cast<double>(n);
    f[static_cast<std::size_t>(i)] = amp * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return f;
}

/// I.i.d. complex Gaussian entries, normalized to unit l2 norm.
inline ComplexVector random_gaussian_probe(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_gaussian_probe: N must be >= 1");
  Rng rng(seed);
  ComplexVector f(n);
  for (auto& x : f) x = rng.complex_normal();
  normalize(f);
  return f;
}

/// Constant envelope 1/sqrt(N), i.i.d. uniform phases.
inline ComplexVector random_phase_probe(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_phase_probe: N must be >= 1");
  Rng rng(seed);
  ComplexVector f(n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& x : f) {
    const double theta = 2.0 * Rng::pi() * rng.uniform01();
    x = amp * std::complex<double>(std::cos(theta), std::sin(theta));
  }
  return f;
}

/// Periodized Gaussian centered at index 0: exp(-d(n)^2 / (2 width^2)) with
/// d(n) = min(n, N-n), normalized to unit l2 norm. Real and nonnegative.
inline ComplexVector gaussian_pulse(std::size_t n, double width = kDefaultGaussianPulseWidth) {
  if (n == 0) throw std::invalid_argument("gaussian_pulse: N must be >= 1");
  if (!(width > 0.0)) throw std::invalid_argument("gaussian_pulse: width must be positive");
  ComplexVector f(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = static_cast<double>(std::min(i, n - i));
    f[i] = std::exp(-d * d / (2.0 * width * width));
  }
  normalize(f);
  return f;
}

}  // namespace csradar

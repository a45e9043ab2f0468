#pragma once

#include <cstddef>
#include <stdexcept>

#include "csradar/complex_vector.hpp"
#include "csradar/rng.hpp"

namespace csradar {

/// One cell of the N x N time-frequency grid. The flat index runs
/// delay-major: i = delay * N + modulation.
struct ShiftIndex {
  std::size_t delay = 0;       // cyclic time shift k
  std::size_t modulation = 0;  // frequency shift q

  static ShiftIndex from_flat(std::size_t flat, std::size_t n) {
    if (n == 0) throw std::invalid_argument("ShiftIndex: n must be positive");
    if (flat >= n * n) throw std::out_of_range("ShiftIndex: flat index out of range");
    return {flat / n, flat % n};
  }

  std::size_t flat(std::size_t n) const {
    if (delay >= n || modulation >= n) {
      throw std::out_of_range("ShiftIndex: (delay, modulation) out of range");
    }
    return delay * n + modulation;
  }

  bool operator==(const ShiftIndex&) const = default;
};

/// Cyclic delay: output[n] = v[(n - k) mod N]. Negative or large k is
/// reduced mod N. Unitary.
inline ComplexVector time_shift(const ComplexVector& v, long long k) {
  const long long n = static_cast<long long>(v.size());
  if (n == 0) throw std::invalid_argument("time_shift: empty vector");
  const long long shift = ((k % n) + n) % n;
  ComplexVector out(v.size());
  for (long long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>((i - shift + n) % n)];
  }
  return out;
}

/// Modulation: output[n] = v[n] * exp(2*pi*i*n*q / N). Unitary.
inline ComplexVector modulate(const ComplexVector& v, long long q) {
  const long long n = static_cast<long long>(v.size());
  if (n == 0) throw std::invalid_argument("modulate: empty vector");
  const long long m = ((q % n) + n) % n;
  ComplexVector out(v.size());
  for (long long i = 0; i < n; ++i) {
    // n*q reduced mod N before the trig call to keep the argument small
    const double phase = 2.0 * Rng::pi() * static_cast<double>((i * m) % n) / static_cast<double>(n);
    out[static_cast<std::size_t>(i)] =
        v[static_cast<std::size_t>(i)] * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return out;
}

/// Time-frequency shift H_i v = M^q T^k v with k = floor(i/N), q = i mod N.
/// Implemented exactly as modulate(time_shift(v, k), q).
inline ComplexVector tf_shift(const ComplexVector& v, const ShiftIndex& idx) {
  const std::size_t n = v.size();
  if (idx.delay >= n || idx.modulation >= n) {
    throw std::out_of_range("tf_shift: index out of range for vector length");
  }
  return modulate(time_shift(v, static_cast<long long>(idx.delay)),
                  static_cast<long long>(idx.modulation));
}

}  // namespace csradar

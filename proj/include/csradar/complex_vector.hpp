#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace csradar {

/// Length-N finite-energy signal: probes, observations, residuals.
using ComplexVector = std::vector<std::complex<double>>;

/// Coefficient vector over the N x N time-frequency grid, length N^2,
/// flat index i = delay * N + modulation.
using CoefficientVector = std::vector<std::complex<double>>;

inline double norm2_squared(const ComplexVector& v) {
  double acc = 0.0;
  for (const auto& x : v) acc += std::norm(x);
  return acc;
}

inline double norm2(const ComplexVector& v) { return std::sqrt(norm2_squared(v)); }

inline double norm1(const ComplexVector& v) {
  double acc = 0.0;
  for (const auto& x : v) acc += std::abs(x);
  return acc;
}

inline double norm_inf(const ComplexVector& v) {
  double acc = 0.0;
  for (const auto& x : v) acc = std::max(acc, std::abs(x));
  return acc;
}

/// Inner product, conjugate-linear in the first argument (project-wide
/// convention): <a, b> = sum conj(a_n) b_n.
inline std::complex<double> inner(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: length mismatch");
  std::complex<double> acc = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) acc += std::conj(a[n]) * b[n];
  return acc;
}

inline bool all_finite(const ComplexVector& v) {
  for (const auto& x : v) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  }
  return true;
}

/// Scales to unit l2 norm in place; rejects the zero vector.
inline void normalize(ComplexVector& v) {
  const double n = norm2(v);
  if (n <= 0.0) throw std::invalid_argument("normalize: zero vector");
  for (auto& x : v) x /= n;
}

}  // namespace csradar

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "csradar/primes.hpp"

namespace csradar {

/// Sparsity-bound values for one grid dimension, with the parameters the
/// noise-dependent bounds were evaluated at.
struct BoundReport {
  std::int64_t n = 0;
  double guaranteed = 0.0;        // K must stay strictly below this
  double high_probability = 0.0;  // evaluated at eps
  double noisy_guaranteed = 0.0;  // evaluated at (eps, t)
  double empirical_line = 0.0;    // natural-log variant
  double eps = 0.0;
  double t = 1.0;
};

namespace detail {

inline void require_alltop_dimension(std::int64_t n, const char* who) {
  if (n < 5 || !is_prime(n)) {
    throw std::invalid_argument(std::string(who) + ": N must be a prime >= 5");
  }
}

}  // namespace detail

/// Guaranteed-recovery sparsity bound (1/2)(sqrt(N) + 1): every scene with
/// K strictly below it is recovered exactly, by BP or OMP.
inline double thm1_bound(std::int64_t n) {
  detail::require_alltop_dimension(n, "thm1_bound");
  return 0.5 * (std::sqrt(static_cast<double>(n)) + 1.0);
}

/// Largest integer sparsity admissible under thm1_bound.
inline std::int64_t thm1_max_sparsity(std::int64_t n) {
  const double bound = thm1_bound(n);
  const auto k = static_cast<std::int64_t>(std::ceil(bound)) - 1;
  return (static_cast<double>(k) < bound) ? k : k - 1;
}

/// High-probability sparsity bound N / (16 ln(N/eps)), 0 < eps < 1.
inline double thm2_bound(std::int64_t n, double eps) {
  detail::require_alltop_dimension(n, "thm2_bound");
  if (!(eps > 0.0) || !(eps < 1.0)) throw std::invalid_argument("thm2_bound: eps must lie in (0,1)");
  return static_cast<double>(n) / (16.0 * std::log(static_cast<double>(n) / eps));
}

/// Noisy-recovery sparsity bound (1/2)(sqrt(N)+1) / (1 + 2 eps N / t):
/// per-entry noise bound eps, l1 stability budget t. Collapses to
/// thm1_bound at eps = 0.
inline double thm3_bound(std::int64_t n, double eps, double t) {
  detail::require_alltop_dimension(n, "thm3_bound");
  if (eps < 0.0) throw std::invalid_argument("thm3_bound: eps must be nonnegative");
  if (!(t > 0.0)) throw std::invalid_argument("thm3_bound: t must be positive");
  return thm1_bound(n) / (1.0 + 2.0 * eps * static_cast<double>(n) / t);
}

/// Empirical phase-transition line K = N / (2 log N). The logarithm base is
/// not standardized; natural log is the default and the log2/log10 variants
/// are exposed for comparison.
inline double empirical_line(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("empirical_line: N must be >= 3");
  return static_cast<double>(n) / (2.0 * std::log(static_cast<double>(n)));
}

inline double empirical_line_log2(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("empirical_line_log2: N must be >= 3");
  return static_cast<double>(n) / (2.0 * std::log2(static_cast<double>(n)));
}

inline double empirical_line_log10(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("empirical_line_log10: N must be >= 3");
  return static_cast<double>(n) / (2.0 * std::log10(static_cast<double>(n)));
}

inline BoundReport bound_report(std::int64_t n, double eps, double t) {
  BoundReport report;
  report.n = n;
  report.guaranteed = thm1_bound(n);
  report.high_probability = thm2_bound(n, eps);
  report.noisy_guaranteed = thm3_bound(n, eps, t);
  report.empirical_line = empirical_line(n);
  report.eps = eps;
  report.t = t;
  return report;
}

}  // namespace csradar

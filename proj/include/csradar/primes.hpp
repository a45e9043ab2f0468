#pragma once

#include <cstdint>
#include <stdexcept>

namespace csradar {

/// Deterministic trial-division primality test, guarded to desk scale.
inline bool is_prime(std::int64_t n) {
  if (n > 1000000) throw std::invalid_argument("is_prime: n exceeds 10^6 guard");
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace csradar

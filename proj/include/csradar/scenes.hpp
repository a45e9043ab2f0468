#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "csradar/complex_vector.hpp"
#include "csradar/rng.hpp"
#include "csradar/tf_shift.hpp"

namespace csradar {

/// One point target on the N x N time-frequency grid.
struct Target {
  std::size_t delay = 0;
  std::size_t modulation = 0;
  std::complex<double> coefficient = 0.0;
};

/// K targets with distinct grid cells.
struct SparseScene {
  std::size_t n = 0;
  std::vector<Target> targets;

  std::size_t sparsity() const { return targets.size(); }
};

/// Additive white Gaussian noise level; snr_db = +infinity means no noise.
struct NoiseSpec {
  double snr_db = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;
};

/// K-sparse scene with support drawn uniformly without replacement from the
/// N^2 grid cells (seeded partial Fisher-Yates shuffle) and coefficients
/// i.i.d. complex Gaussian, real/imaginary parts of variance 1/2 each.
inline SparseScene random_scene(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_scene: N must be >= 1");
  const std::size_t m = n * n;
  if (k > m) throw std::invalid_argument("random_scene: K exceeds N^2");
  Rng rng(seed);
  std::vector<std::uint32_t> cells(m);
  std::iota(cells.begin(), cells.end(), 0);
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t pick = j + static_cast<std::size_t>(rng.bounded(m - j));
    std::swap(cells[j], cells[pick]);
  }
  std::sort(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(k));
  SparseScene scene;
  scene.n = n;
  scene.targets.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    const ShiftIndex idx = ShiftIndex::from_flat(cells[j], n);
    scene.targets.push_back({idx.delay, idx.modulation, rng.complex_normal()});
  }
  return scene;
}

/// Scene -> length-N^2 coefficient vector, entry at delay*N + modulation.
inline CoefficientVector vectorize(const SparseScene& scene) {
  CoefficientVector s(scene.n * scene.n, 0.0);
  for (const auto& t : scene.targets) {
    s[ShiftIndex{t.delay, t.modulation}.flat(scene.n)] = t.coefficient;
  }
  return s;
}

/// Inverse of vectorize for reporting: keeps entries with magnitude strictly
/// above threshold, in flat-index order.
inline SparseScene devectorize(const CoefficientVector& s, double threshold = 0.0) {
  const auto m = s.size();
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
  if (n * n != m) throw std::invalid_argument("devectorize: length is not a perfect square");
  SparseScene scene;
  scene.n = n;
  for (std::size_t i = 0; i < m; ++i) {
    if (std::abs(s[i]) > threshold) {
      const ShiftIndex idx = ShiftIndex::from_flat(i, n);
      scene.targets.push_back({idx.delay, idx.modulation, s[i]});
    }
  }
  return scene;
}

/// y + e with e i.i.d. complex Gaussian scaled so the expected noise energy
/// satisfies 10*log10(|y|^2 / E|e|^2) = snr_db, measured against the realized
/// |y|^2 of this observation. Infinite SNR returns y unchanged.
inline ComplexVector add_awgn(const ComplexVector& y, const NoiseSpec& spec) {
  if (std::isinf(spec.snr_db) && spec.snr_db > 0) return y;
  if (!std::isfinite(spec.snr_db)) throw std::invalid_argument("add_awgn: invalid SNR");
  const double signal_energy = norm2_squared(y);
  if (signal_energy <= 0.0) {
    throw std::invalid_argument("add_awgn: zero signal with finite SNR");
  }
  const double noise_energy = signal_energy * std::pow(10.0, -spec.snr_db / 10.0);
  const double sigma = std::sqrt(noise_energy / static_cast<double>(y.size()));
  Rng rng(spec.seed);
  ComplexVector out(y);
  for (auto& x : out) x += sigma * rng.complex_normal();
  return out;
}

/// Largest per-entry noise magnitude of a realized perturbation; the
/// entrywise bound the noisy-recovery guarantees are stated in.
inline double max_entry_deviation(const ComplexVector& noisy, const ComplexVector& clean) {
  if (noisy.size() != clean.size()) throw std::invalid_argument("max_entry_deviation: length mismatch");
  double eps = 0.0;
  for (std::size_t i = 0; i < noisy.size(); ++i) eps = std::max(eps, std::abs(noisy[i] - clean[i]));
  return eps;
}

/// l2 recovery error |s - s_star|.
inline double scene_error(const CoefficientVector& s, const CoefficientVector& s_star) {
  if (s.size() != s_star.size()) throw std::invalid_argument("scene_error: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) acc += std::norm(s[i] - s_star[i]);
  return std::sqrt(acc);
}

}  // namespace csradar

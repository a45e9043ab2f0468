#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "csradar/complex_vector.hpp"
#include "csradar/gabor.hpp"
#include "csradar/scenes.hpp"

namespace csradar {

/// N x N grid of matched-filter magnitudes |<H_(k,q) probe, y>| over the
/// time-frequency plane; row = delay, column = modulation.
struct AmbiguityMap {
  std::size_t n = 0;
  std::vector<double> values;  // row-major, n * n

  double at(std::size_t delay, std::size_t modulation) const {
    if (delay >= n || modulation >= n) throw std::out_of_range("AmbiguityMap::at");
    return values[delay * n + modulation];
  }

  double& at(std::size_t delay, std::size_t modulation) {
    if (delay >= n || modulation >= n) throw std::out_of_range("AmbiguityMap::at");
    return values[delay * n + modulation];
  }
};

/// Correlates y against every time-frequency shift of the probe: the
/// discrete cross-ambiguity surface. Values are exactly the entrywise
/// moduli of the Gabor adjoint reshaped by the flat-index convention.
inline AmbiguityMap ambiguity_map(const ComplexVector& probe, const ComplexVector& y) {
  if (probe.size() != y.size()) throw std::invalid_argument("ambiguity_map: length mismatch");
  const GaborDictionary dict(probe);
  const CoefficientVector correlations = dict.adjoint(y);
  AmbiguityMap map;
  map.n = probe.size();
  map.values.resize(correlations.size());
  for (std::size_t i = 0; i < correlations.size(); ++i) map.values[i] = std::abs(correlations[i]);
  return map;
}

/// Self-ambiguity surface of a unit-norm probe; peak value 1 at (0, 0).
inline AmbiguityMap self_ambiguity(const ComplexVector& probe) {
  return ambiguity_map(probe, probe);
}

/// Matched-filter view of a target scene: y = Phi vectorize(scene), plus
/// optional AWGN, correlated against all shifts of the probe. Superposes one
/// shifted ambiguity surface per target plus their mutual interference.
inline AmbiguityMap classical_scene_map(const ComplexVector& probe, const SparseScene& scene,
                                        const NoiseSpec& noise = {}) {
  if (probe.size() != scene.n) throw std::invalid_argument("classical_scene_map: probe/scene dimension mismatch");
  const GaborDictionary dict(probe);
  ComplexVector y = dict.apply(vectorize(scene));
  y = add_awgn(y, noise);
  return ambiguity_map(probe, y);
}

/// Full width at half maximum along the delay axis through a map cell,
/// in grid cells: circular scan away from the center in both directions
/// with linear interpolation at the half-max crossings. A map with no
/// crossing within the circular half-axis is degenerate and reports N.
inline double footprint_width(const AmbiguityMap& map, std::size_t center_delay,
                              std::size_t center_modulation) {
  const std::size_t n = map.n;
  const double peak = map.at(center_delay, center_modulation);
  if (!(peak > 0.0)) throw std::invalid_argument("footprint_width: center cell is zero");
  const double half = 0.5 * peak;

  const auto value_at_offset = [&](long long offset) {
    const long long nn = static_cast<long long>(n);
    const std::size_t row =
        static_cast<std::size_t>(((static_cast<long long>(center_delay) + offset) % nn + nn) % nn);
    return map.at(row, center_modulation);
  };

  const auto crossing_distance = [&](int direction) -> double {
    double prev = peak;
    for (std::size_t step = 1; step <= n / 2; ++step) {
      const double cur = value_at_offset(direction * static_cast<long long>(step));
      if (cur < half) {
        return static_cast<double>(step - 1) + (prev - half) / (prev - cur);
      }
      prev = cur;
    }
    return -1.0;  // no crossing on this half-axis
  };

  const double right = crossing_distance(+1);
  const double left = crossing_distance(-1);
  if (right < 0.0 || left < 0.0) return static_cast<double>(n);
  return right + left;
}

}  // namespace csradar

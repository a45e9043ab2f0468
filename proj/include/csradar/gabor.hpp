#pragma once

#include <fftw3.h>

#include <cmath>
#include <cstddef>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "csradar/complex_vector.hpp"
#include "csradar/tf_shift.hpp"

namespace csradar {

/// Above this dimension the dense-Gram operations (coherence,
/// verify_mub_properties) refuse to run unless the caller raises the limit.
inline constexpr std::size_t kDefaultDenseGramThreshold = 61;

namespace detail {

// FFTW planning (and plan destruction) is not thread-safe; executing a plan
// on caller-owned arrays is. All planner calls go through this lock.
inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

inline fftw_complex* as_fftw(std::complex<double>* p) {
  return reinterpret_cast<fftw_complex*>(p);
}

}  // namespace detail

/// The N x N^2 dictionary of all time-frequency shifts of one unit-norm
/// probe. Atoms are addressed by ShiftIndex (flat index = delay * N +
/// modulation) and never materialized as a dense matrix; apply/adjoint run
/// blockwise in O(N^2 log N) through batched length-N DFTs.
///
/// Immutable and cheap to copy (shared internals). Concurrent apply/adjoint
/// calls on one dictionary are safe: each call owns its scratch buffers.
class GaborDictionary {
 public:
  explicit GaborDictionary(ComplexVector probe,
                           std::size_t dense_gram_threshold = kDefaultDenseGramThreshold)
      : impl_(std::make_shared<const Impl>(std::move(probe), dense_gram_threshold)) {}

  std::size_t dimension() const { return impl_->n; }
  std::size_t atom_count() const { return impl_->n * impl_->n; }
  std::size_t dense_gram_threshold() const { return impl_->dense_threshold; }
  const ComplexVector& probe() const { return impl_->probe; }

  /// Atom phi_i = M^q T^k probe for idx = (k, q). Unit norm.
  ComplexVector atom(const ShiftIndex& idx) const {
    if (idx.delay >= impl_->n || idx.modulation >= impl_->n) {
      throw std::out_of_range("GaborDictionary::atom: index out of range");
    }
    return tf_shift(impl_->probe, idx);
  }

  ComplexVector atom(std::size_t flat_index) const {
    return atom(ShiftIndex::from_flat(flat_index, impl_->n));
  }

  /// y = Phi s: block k contributes diag(T^k probe) times the length-N
  /// modulation transform (exponent +2*pi*i/N) of coefficients s[kN .. kN+N).
  ComplexVector apply(const CoefficientVector& s) const {
    const std::size_t n = impl_->n;
    if (s.size() != n * n) throw std::invalid_argument("GaborDictionary::apply: length mismatch");
    CoefficientVector work(s);
    impl_->execute(impl_->backward_plan, work.data());
    ComplexVector y(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const std::complex<double>* shifted = impl_->shifted_probes.data() + k * n;
      const std::complex<double>* block = work.data() + k * n;
      for (std::size_t i = 0; i < n; ++i) y[i] += shifted[i] * block[i];
    }
    return y;
  }

  /// Entry i of the result is <phi_i, y> (conjugate on the first slot), so
  /// apply/adjoint satisfy <Phi s, y> = <s, Phi* y>.
  CoefficientVector adjoint(const ComplexVector& y) const {
    const std::size_t n = impl_->n;
    if (y.size() != n) throw std::invalid_argument("GaborDictionary::adjoint: length mismatch");
    CoefficientVector work(n * n);
    for (std::size_t k = 0; k < n; ++k) {
      const std::complex<double>* shifted = impl_->shifted_probes.data() + k * n;
      std::complex<double>* row = work.data() + k * n;
      for (std::size_t i = 0; i < n; ++i) row[i] = std::conj(shifted[i]) * y[i];
    }
    impl_->execute(impl_->forward_plan, work.data());
    return work;
  }

 private:
  struct Impl {
    std::size_t n = 0;
    std::size_t dense_threshold = kDefaultDenseGramThreshold;
    ComplexVector probe;
    ComplexVector shifted_probes;  // row k = T^k probe, n x n row-major
    fftw_plan forward_plan = nullptr;
    fftw_plan backward_plan = nullptr;

    Impl(ComplexVector p, std::size_t threshold)
        : n(p.size()), dense_threshold(threshold), probe(std::move(p)) {
      if (n == 0) throw std::invalid_argument("GaborDictionary: zero-length probe");
      if (!all_finite(probe)) throw std::invalid_argument("GaborDictionary: probe has non-finite entries");
      if (std::abs(norm2(probe) - 1.0) > 1e-9) {
        throw std::invalid_argument("GaborDictionary: probe must have unit l2 norm");
      }
      shifted_probes.resize(n * n);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          shifted_probes[k * n + i] = probe[(i + n - k) % n];
        }
      }
      // One batched plan per direction: n transforms of length n over
      // contiguous rows. FFTW_UNALIGNED so new-array execution accepts any
      // caller buffer.
      ComplexVector scratch(n * n);
      const int ni = static_cast<int>(n);
      std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
      forward_plan = fftw_plan_many_dft(1, &ni, ni, detail::as_fftw(scratch.data()), nullptr, 1,
                                        ni, detail::as_fftw(scratch.data()), nullptr, 1, ni,
                                        FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
      backward_plan = fftw_plan_many_dft(1, &ni, ni, detail::as_fftw(scratch.data()), nullptr, 1,
                                         ni, detail::as_fftw(scratch.data()), nullptr, 1, ni,
                                         FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
      if (forward_plan == nullptr || backward_plan == nullptr) {
        throw std::runtime_error("GaborDictionary: FFTW planning failed");
      }
    }

    void execute(const fftw_plan& plan, std::complex<double>* data) const {
      fftw_execute_dft(plan, detail::as_fftw(data), detail::as_fftw(data));
    }

    ~Impl() {
      std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
      if (forward_plan != nullptr) fftw_destroy_plan(forward_plan);
      if (backward_plan != nullptr) fftw_destroy_plan(backward_plan);
    }

    Impl(const Impl&) = delete;
    Impl& operator=(const Impl&) = delete;
  };

  std::shared_ptr<const Impl> impl_;
};

inline GaborDictionary build_dictionary(ComplexVector probe,
                                        std::size_t dense_gram_threshold = kDefaultDenseGramThreshold) {
  return GaborDictionary(std::move(probe), dense_gram_threshold);
}

/// Welch lower bound sqrt((M-N) / (N(M-1))) on the coherence of M unit-norm
/// vectors in dimension N.
inline double welch_bound(std::size_t n, std::size_t m) {
  if (n == 0) throw std::invalid_argument("welch_bound: N must be >= 1");
  if (m < n) throw std::invalid_argument("welch_bound: requires M >= N");
  if (m == n) return 0.0;
  return std::sqrt(static_cast<double>(m - n) /
                   (static_cast<double>(n) * static_cast<double>(m - 1)));
}

/// Coherence mu = max_{i != j} |<phi_i, phi_j>| over all atom pairs, via a
/// streamed dense Gram (columns obtained with the fast adjoint). Refuses to
/// run above the dictionary's dense-Gram threshold.
inline double coherence(const GaborDictionary& dict) {
  const std::size_t n = dict.dimension();
  if (n > dict.dense_gram_threshold()) {
    throw std::invalid_argument("coherence: dimension exceeds dense-Gram threshold");
  }
  const std::size_t m = dict.atom_count();
  double mu = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const CoefficientVector column = dict.adjoint(dict.atom(j));
    for (std::size_t i = 0; i < m; ++i) {
      if (i == j) continue;
      mu = std::max(mu, std::abs(column[i]));
    }
  }
  return mu;
}

/// Outcome of checking the two Alltop block properties on a dictionary:
/// every delay block an orthonormal basis, and all cross-block inner
/// products of magnitude 1/sqrt(N).
struct PropertyReport {
  std::size_t n = 0;
  double tol = 0.0;
  bool within_block_identity = false;
  bool cross_block_unbiased = false;
  double max_within_block_deviation = 0.0;
  double max_cross_block_deviation = 0.0;
  double coherence = 0.0;
  double welch = 0.0;

  bool pass() const { return within_block_identity && cross_block_unbiased; }
};

/// Checks the mutually-unbiased-bases structure of the dictionary against
/// tolerance tol. Failures are reported in the result, never thrown.
inline PropertyReport verify_mub_properties(const GaborDictionary& dict, double tol) {
  const std::size_t n = dict.dimension();
  if (n > dict.dense_gram_threshold()) {
    throw std::invalid_argument("verify_mub_properties: dimension exceeds dense-Gram threshold");
  }
  const std::size_t m = dict.atom_count();
  const double unbiased = 1.0 / std::sqrt(static_cast<double>(n));
  PropertyReport report;
  report.n = n;
  report.tol = tol;
  report.welch = welch_bound(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    const CoefficientVector column = dict.adjoint(dict.atom(j));
    const std::size_t block_j = j / n;
    for (std::size_t i = 0; i < m; ++i) {
      const double magnitude = std::abs(column[i]);
      if (i != j) report.coherence = std::max(report.coherence, magnitude);
      if (i / n == block_j) {
        const double expected = (i == j) ? 1.0 : 0.0;
        report.max_within_block_deviation =
            std::max(report.max_within_block_deviation, std::abs(magnitude - expected));
      } else {
        report.max_cross_block_deviation =
            std::max(report.max_cross_block_deviation, std::abs(magnitude - unbiased));
      }
    }
  }
  report.within_block_identity = report.max_within_block_deviation <= tol;
  report.cross_block_unbiased = report.max_cross_block_deviation <= tol;
  return report;
}

}  // namespace csradar

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "csradar/complex_vector.hpp"
#include "csradar/gabor.hpp"

namespace csradar {

struct SolverOptions {
  int max_iterations = 20000;
  double abs_tol = 1e-8;
  double rel_tol = 1e-8;
  double penalty = 1.0;  // splitting-scheme step parameter

  void validate() const {
    if (max_iterations < 1) throw std::invalid_argument("SolverOptions: max_iterations must be >= 1");
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw std::invalid_argument("SolverOptions: tolerances must be positive");
    if (!(penalty > 0.0)) throw std::invalid_argument("SolverOptions: penalty must be positive");
  }
};

struct RecoveryResult {
  CoefficientVector solution;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  bool converged = false;
  double objective = 0.0;  // l1 norm (sum of entry moduli) of the solution
};

namespace detail {

/// Complex soft threshold: shrinks the modulus by kappa, preserves phase.
inline std::complex<double> soft_threshold(std::complex<double> v, double kappa) {
  const double m = std::abs(v);
  if (m <= kappa) return 0.0;
  return v * ((m - kappa) / m);
}

/// Clamp each entry of r into the closed complex disc of radius eps.
inline void clamp_to_disc(ComplexVector& r, double eps) {
  for (auto& x : r) {
    const double m = std::abs(x);
    if (m > eps) x *= (eps / m);
  }
}

inline Eigen::MatrixXcd gather_atoms(const GaborDictionary& dict,
                                     const std::vector<std::size_t>& support) {
  const auto n = static_cast<Eigen::Index>(dict.dimension());
  Eigen::MatrixXcd a(n, static_cast<Eigen::Index>(support.size()));
  for (std::size_t j = 0; j < support.size(); ++j) {
    const ComplexVector atom = dict.atom(support[j]);
    for (Eigen::Index i = 0; i < n; ++i) a(i, static_cast<Eigen::Index>(j)) = atom[static_cast<std::size_t>(i)];
  }
  return a;
}

}  // namespace detail

/// Minimum-l1 recovery under the entrywise residual constraint
/// |(Phi s - y)_n| <= eps. With eps = 0 this is equality-constrained Basis
/// Pursuit. Douglas-Rachford style splitting: alternate the exact Euclidean
/// projection onto the constraint set (cheap because the full cyclic Gabor
/// family satisfies Phi Phi* = N I) with complex soft-thresholding of the
/// moduli; the returned iterate is the constraint-projected one, so it is
/// feasible to machine precision whenever the solver reports convergence.
/// Non-convergence is reported through the converged flag, never thrown.
inline RecoveryResult bpdn_entrywise(const GaborDictionary& dict, const ComplexVector& y,
                                     double eps, const SolverOptions& opts = {}) {
  opts.validate();
  if (eps < 0.0) throw std::invalid_argument("bpdn_entrywise: eps must be nonnegative");
  const std::size_t n = dict.dimension();
  if (y.size() != n) throw std::invalid_argument("bpdn_entrywise: observation length mismatch");
  const std::size_t m = dict.atom_count();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double shrink = 1.0 / opts.penalty;

  CoefficientVector z = dict.adjoint(y);
  for (auto& v : z) v *= inv_n;  // minimum-energy feasible start
  CoefficientVector x(m, 0.0), u(m, 0.0), z_prev(m, 0.0), v(m, 0.0);

  RecoveryResult result;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    for (std::size_t i = 0; i < m; ++i) v[i] = z[i] - u[i];
    // Exact projection of v onto {s : |(Phi s - y)_n| <= eps for all n}
    ComplexVector r = dict.apply(v);
    for (std::size_t i = 0; i < n; ++i) r[i] -= y[i];
    ComplexVector target = r;
    detail::clamp_to_disc(target, eps);
    for (std::size_t i = 0; i < n; ++i) target[i] -= r[i];
    const CoefficientVector correction = dict.adjoint(target);
    for (std::size_t i = 0; i < m; ++i) x[i] = v[i] + correction[i] * inv_n;

    z_prev.swap(z);
    double pri_sq = 0.0, dual_sq = 0.0, x_sq = 0.0, z_sq = 0.0, u_sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const std::complex<double> zi = detail::soft_threshold(x[i] + u[i], shrink);
      z[i] = zi;
      u[i] += x[i] - zi;
      pri_sq += std::norm(x[i] - zi);
      dual_sq += std::norm(zi - z_prev[i]);
      x_sq += std::norm(x[i]);
      z_sq += std::norm(zi);
      u_sq += std::norm(u[i]);
    }
    result.iterations = it;
    result.primal_residual = std::sqrt(pri_sq);
    result.dual_residual = opts.penalty * std::sqrt(dual_sq);
    const double eps_pri = opts.abs_tol + opts.rel_tol * std::sqrt(std::max(x_sq, z_sq));
    const double eps_dual = opts.abs_tol + opts.rel_tol * opts.penalty * std::sqrt(u_sq);
    if (result.primal_residual <= eps_pri && result.dual_residual <= eps_dual) {
      result.converged = true;
      break;
    }
  }
  result.solution = std::move(x);
  result.objective = norm1(result.solution);
  return result;
}

/// Equality-constrained Basis Pursuit: min |s|_1 subject to Phi s = y.
inline RecoveryResult basis_pursuit(const GaborDictionary& dict, const ComplexVector& y,
                                    const SolverOptions& opts = {}) {
  return bpdn_entrywise(dict, y, 0.0, opts);
}

/// Orthogonal Matching Pursuit: greedily selects the atom most correlated
/// with the residual (lowest flat index wins exact ties), least-squares
/// refits on the accumulated support, and stops after sparsity_limit atoms
/// or once the residual norm drops to residual_tol. A rank-deficient
/// least-squares refit stops the loop with converged = false.
inline RecoveryResult omp(const GaborDictionary& dict, const ComplexVector& y,
                          std::size_t sparsity_limit, double residual_tol = 1e-8) {
  if (sparsity_limit < 1) throw std::invalid_argument("omp: sparsity_limit must be >= 1");
  const std::size_t n = dict.dimension();
  if (y.size() != n) throw std::invalid_argument("omp: observation length mismatch");
  const std::size_t m = dict.atom_count();
  sparsity_limit = std::min(sparsity_limit, m);

  RecoveryResult result;
  result.solution.assign(m, 0.0);
  std::vector<std::size_t> support;
  std::vector<bool> selected(m, false);
  ComplexVector residual = y;
  Eigen::VectorXcd coeffs;
  bool rank_ok = true;

  double residual_norm = norm2(residual);
  while (support.size() < sparsity_limit && residual_norm > residual_tol) {
    const CoefficientVector correlation = dict.adjoint(residual);
    std::size_t best = m;
    double best_mag = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (selected[i]) continue;
      const double mag = std::abs(correlation[i]);
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
    if (best == m || best_mag == 0.0) break;  // residual uncorrelated with all atoms
    selected[best] = true;
    support.push_back(best);

    const Eigen::MatrixXcd atoms = detail::gather_atoms(dict, support);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(atoms);
    if (qr.rank() < static_cast<Eigen::Index>(support.size())) {
      rank_ok = false;
      support.pop_back();
      break;
    }
    const Eigen::Map<const Eigen::VectorXcd> rhs(y.data(), static_cast<Eigen::Index>(n));
    coeffs = qr.solve(rhs);
    const Eigen::VectorXcd fit = atoms * coeffs;
    for (std::size_t i = 0; i < n; ++i) residual[i] = y[i] - fit(static_cast<Eigen::Index>(i));
    residual_norm = norm2(residual);
  }

  for (std::size_t j = 0; j < support.size(); ++j) {
    result.solution[support[j]] = coeffs(static_cast<Eigen::Index>(j));
  }
  result.iterations = static_cast<int>(support.size());
  result.primal_residual = residual_norm;
  result.dual_residual = 0.0;
  result.converged = rank_ok && residual_norm <= residual_tol;
  result.objective = norm1(result.solution);
  return result;
}

/// Exhaustive minimum-residual search over all supports of size <= k_max:
/// ground truth for desk-scale tests. Supports are visited by increasing
/// size, lexicographically within a size, and a candidate replaces the
/// incumbent only on a strict residual improvement, so ties resolve to the
/// smallest support in lexicographic order. Guarded to ~10^7 candidates.
inline RecoveryResult l0_oracle(const GaborDictionary& dict, const ComplexVector& y,
                                std::size_t k_max) {
  const std::size_t n = dict.dimension();
  if (y.size() != n) throw std::invalid_argument("l0_oracle: observation length mismatch");
  const std::size_t m = dict.atom_count();
  k_max = std::min(k_max, m);

  double budget = 0.0;
  double binom = 1.0;
  for (std::size_t j = 1; j <= k_max; ++j) {
    binom *= static_cast<double>(m - j + 1) / static_cast<double>(j);
    budget += binom;
    if (budget > 1e7) throw std::invalid_argument("l0_oracle: enumeration budget exceeded");
  }

  RecoveryResult best;
  best.solution.assign(m, 0.0);
  best.primal_residual = norm2(y);  // empty-support candidate
  best.converged = true;
  int evaluated = 1;

  const Eigen::Map<const Eigen::VectorXcd> rhs(y.data(), static_cast<Eigen::Index>(n));
  const double improve_tol = 1e-12 * (1.0 + best.primal_residual);
  std::vector<std::size_t> support;
  for (std::size_t k = 1; k <= k_max; ++k) {
    support.assign(k, 0);
    for (std::size_t j = 0; j < k; ++j) support[j] = j;
    while (true) {
      const Eigen::MatrixXcd atoms = detail::gather_atoms(dict, support);
      const Eigen::VectorXcd coeffs = Eigen::ColPivHouseholderQR<Eigen::MatrixXcd>(atoms).solve(rhs);
      const double residual = (rhs - atoms * coeffs).norm();
      ++evaluated;
      if (residual < best.primal_residual - improve_tol) {
        best.primal_residual = residual;
        best.solution.assign(m, 0.0);
        for (std::size_t j = 0; j < k; ++j) {
          best.solution[support[j]] = coeffs(static_cast<Eigen::Index>(j));
        }
      }
      // next lexicographic k-combination of [0, m)
      std::size_t pos = k;
      while (pos > 0 && support[pos - 1] == m - k + pos - 1) --pos;
      if (pos == 0) break;
      ++support[pos - 1];
      for (std::size_t j = pos; j < k; ++j) support[j] = support[j - 1] + 1;
    }
  }
  best.iterations = evaluated;
  best.objective = norm1(best.solution);
  return best;
}

}  // namespace csradar

#pragma once

// Test-only reference implementations, deliberately independent of the
// library's solvers:
//   - principal eigenpair from the characteristic polynomial (Faddeev -
//     LeVerrier coefficients, Newton from above the largest root, Gauss -
//     Jordan null space), usable up to n = 4
//   - largest eigenvalue of M^T M the same way, for spectral norms
//   - max cycle mean by exhaustive enumeration of all simple cycles, n <= 6

#include <cmath>
#include <limits>
#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "pairrank/matrix.hpp"

namespace pairrank::oracle {

// Coefficients c of p(x) = x^n + c[0] x^(n-1) + ... + c[n-1], by the
// Faddeev-LeVerrier recurrence.
inline std::vector<double> characteristic_polynomial(const Matrix& a) {
  const int n = a.size();
  std::vector<double> coeffs;
  Matrix m(n);  // M_0 = 0
  double c = 1.0;
  for (int k = 1; k <= n; ++k) {
    // M_k = A (M_{k-1} + c_{k-1} I)
    Matrix t = m;
    for (int i = 0; i < n; ++i) t(i, i) += c;
    Matrix next(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int l = 0; l < n; ++l) acc += a(i, l) * t(l, j);
        next(i, j) = acc;
      }
    m = std::move(next);
    double trace = 0.0;
    for (int i = 0; i < n; ++i) trace += m(i, i);
    c = -trace / k;
    coeffs.push_back(c);
  }
  return coeffs;
}

inline double poly_eval(const std::vector<double>& coeffs, double x) {
  double v = 1.0;
  for (double c : coeffs) v = v * x + c;
  return v;
}

inline double poly_deriv_eval(const std::vector<double>& coeffs, double x) {
  const int n = static_cast<int>(coeffs.size());
  double v = n;
  for (int k = 0; k + 1 < n; ++k) v = v * x + (n - 1 - k) * coeffs[static_cast<std::size_t>(k)];
  return v;
}

// Newton from a point above the largest real root. When every eigenvalue has
// real part (and modulus) at most the largest real root -- true for both
// nonnegative matrices and symmetric PSD ones -- the iteration decreases
// monotonically to that root.
inline double largest_real_root(const std::vector<double>& coeffs, double upper) {
  double x = upper;
  for (int iter = 0; iter < 500; ++iter) {
    double p = poly_eval(coeffs, x);
    double dp = poly_deriv_eval(coeffs, x);
    if (dp == 0.0) break;
    double next = x - p / dp;
    if (!(next < x)) break;  // converged (or rounding pushed us sideways)
    if (std::abs(x - next) <= 1e-15 * std::max(1.0, std::abs(next))) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

// One vector spanning the null space of a rank n-1 matrix, via Gauss-Jordan.
inline Vec null_vector(Matrix b) {
  const int n = b.size();
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(b(i, j)));
  const double tol = 1e-8 * std::max(scale, 1e-300);

  std::vector<int> pivot_of_row(static_cast<std::size_t>(n), -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int p = rank;
    for (int r = rank; r < n; ++r)
      if (std::abs(b(r, col)) > std::abs(b(p, col))) p = r;
    if (std::abs(b(p, col)) <= tol) continue;
    for (int j = 0; j < n; ++j) std::swap(b(p, j), b(rank, j));
    double d = b(rank, col);
    for (int j = 0; j < n; ++j) b(rank, j) /= d;
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      double f = b(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) b(r, j) -= f * b(rank, j);
    }
    pivot_of_row[static_cast<std::size_t>(rank)] = col;
    ++rank;
  }
  if (rank != n - 1) throw std::runtime_error("oracle::null_vector: matrix is not rank n-1");

  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_of_row[static_cast<std::size_t>(r)])] = true;
  int free_col = 0;
  while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;

  Vec x(static_cast<std::size_t>(n), 0.0);
  x[static_cast<std::size_t>(free_col)] = 1.0;
  for (int r = 0; r < rank; ++r)
    x[static_cast<std::size_t>(pivot_of_row[static_cast<std::size_t>(r)])] = -b(r, free_col);
  return x;
}

struct EigenPair {
  Vec v;          // positive, geometric mean 1
  double lambda;  // spectral radius
};

// Principal eigenpair of a positive matrix from first principles.
inline EigenPair principal_eigenpair(const Matrix& a) {
  const int n = a.size();
  auto coeffs = characteristic_polynomial(a);
  double upper = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(a(i, j));
    upper = std::max(upper, row);
  }
  double lambda = largest_real_root(coeffs, upper + 1.0);

  Matrix b = a;
  for (int i = 0; i < n; ++i) b(i, i) -= lambda;
  Vec v = null_vector(std::move(b));
  if (v[0] < 0.0)
    for (double& x : v) x = -x;
  Vec logs(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0.0) throw std::runtime_error("oracle::principal_eigenpair: sign change in eigenvector");
    logs[i] = std::log(v[i]);
  }
  double log_gm = mean(logs);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::exp(logs[i] - log_gm);
  return EigenPair{std::move(v), lambda};
}

// Largest singular value from the characteristic polynomial of M^T M.
inline double spectral_norm(const Matrix& m) {
  const int n = m.size();
  Matrix g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int l = 0; l < n; ++l) acc += m(l, i) * m(l, j);
      g(i, j) = acc;
    }
  auto coeffs = characteristic_polynomial(g);
  double upper = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(g(i, j));
    upper = std::max(upper, row);
  }
  double lambda = largest_real_root(coeffs, upper + 1.0);
  return std::sqrt(std::max(lambda, 0.0));
}

// Max over all simple cycles of weight/length; every directed simple cycle is
// visited exactly once from its minimal node.
inline double max_cycle_mean_exhaustive(const Matrix& a) {
  const int n = a.size();
  double best = -std::numeric_limits<double>::infinity();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void(int, int, double, int)> dfs = [&](int start, int cur, double weight, int len) {
    best = std::max(best, (weight + a(cur, start)) / (len + 1));
    for (int next = start + 1; next < n; ++next) {
      if (used[static_cast<std::size_t>(next)]) continue;
      used[static_cast<std::size_t>(next)] = 1;
      dfs(start, next, weight + a(cur, next), len + 1);
      used[static_cast<std::size_t>(next)] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    std::fill(used.begin(), used.end(), 0);
    used[static_cast<std::size_t>(s)] = 1;
    dfs(s, s, 0.0, 0);
  }
  return best;
}

}  // namespace pairrank::oracle

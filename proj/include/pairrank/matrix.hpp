#pragma once

// Dense square matrices and small vector helpers.
//
// Comparison matrices are small (n up to a few hundred), so everything in
// this library is plain O(n^2)/O(n^3) dense code over std::vector<double>.

#include <cmath>
#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace pairrank {

using Vec = std::vector<double>;

class Matrix {
 public:
  Matrix() = default;

  explicit Matrix(int n, double fill = 0.0) : n_(n), data_(checked_size(n), fill) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix constant(int n, double value) { return Matrix(n, value); }

  int size() const { return n_; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  const std::vector<double>& data() const { return data_; }

  // y = M x
  Vec apply(const Vec& x) const {
    Vec y(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n_; ++j) acc += (*this)(i, j) * x[j];
      y[i] = acc;
    }
    return y;
  }

  // y = M^T x
  Vec apply_transpose(const Vec& x) const {
    Vec y(n_, 0.0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) y[j] += (*this)(i, j) * x[i];
    return y;
  }

  Vec row(int i) const {
    Vec r(n_);
    for (int j = 0; j < n_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  Vec row_sums() const {
    Vec r(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n_; ++j) acc += (*this)(i, j);
      r[i] = acc;
    }
    return r;
  }

  Vec col_sums() const {
    Vec c(n_, 0.0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) c[j] += (*this)(i, j);
    return c;
  }

  bool all_finite() const {
    for (double v : data_) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  static std::size_t checked_size(int n) {
    if (n < 0) throw std::invalid_argument("Matrix: negative dimension");
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  }

  int n_ = 0;
  std::vector<double> data_;
};

// Compensated (Kahan) sum, so aggregation does not depend on clever compilers.
inline double kahan_sum(const Vec& v) {
  double sum = 0.0, comp = 0.0;
  for (double x : v) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

inline double mean(const Vec& v) {
  if (v.empty()) throw std::invalid_argument("mean: empty vector");
  return kahan_sum(v) / static_cast<double>(v.size());
}

inline Vec centered(Vec v) {
  double m = mean(v);
  for (double& x : v) x -= m;
  return v;
}

inline double max_abs(const Vec& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double inf_distance(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inf_distance: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double norm2(const Vec& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

inline double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline double frobenius_norm(const Matrix& m) {
  double acc = 0.0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) acc += m(i, j) * m(i, j);
  return std::sqrt(acc);
}

}  // namespace pairrank

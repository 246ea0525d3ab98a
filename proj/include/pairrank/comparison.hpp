#pragma once

// Comparison-matrix domain types and the exp/log bridges between the
// multiplicative and additive pictures.
//
//   PositiveMatrix  : elementwise positive n x n comparison matrix
//   AdditiveMatrix  : real n x n matrix of log-comparisons (skew when reciprocal)
//   ProjectiveScore : positive score vector, geometric mean 1
//   AdditiveScore   : real score vector, entries sum to 0
//   KParameter      : 0 | finite k > 0 | infinity, selecting the ranking map
//
// Conventions: multiplicative scores are normalized to geometric mean 1 and
// additive scores to sum zero. The two canonical forms correspond exactly
// under entrywise log, so the log version of any ranking map is literally
// log-conjugate to its multiplicative version.

#include <string>

#include "pairrank/errors.hpp"
#include "pairrank/matrix.hpp"

namespace pairrank {

// |A_ij + A_ji| tolerance below which a matrix counts as reciprocal/skew.
inline constexpr double kSkewTol = 1e-12;

// exp() arguments beyond this magnitude are rejected; callers needing larger
// scale parameters must stay in the log domain.
inline constexpr double kExpOverflowLimit = 700.0;

class PositiveMatrix {
 public:
  explicit PositiveMatrix(Matrix entries);

  int size() const { return m_.size(); }
  const Matrix& entries() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  // X_ij * X_ji = 1 within tol, checked in the log domain.
  bool reciprocal(double tol = kSkewTol) const;

 private:
  Matrix m_;
};

class AdditiveMatrix {
 public:
  explicit AdditiveMatrix(Matrix entries);

  int size() const { return m_.size(); }
  const Matrix& entries() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  // A_ij = -A_ji within kSkewTol, i.e. the matrix lies in the skew subspace.
  bool skew() const { return skew_; }

 private:
  Matrix m_;
  bool skew_;
};

class ProjectiveScore {
 public:
  // Requires positive entries with geometric mean 1 within 1e-12.
  explicit ProjectiveScore(Vec entries);

  int size() const { return static_cast<int>(v_.size()); }
  const Vec& entries() const { return v_; }
  double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }

 private:
  Vec v_;
};

class AdditiveScore {
 public:
  // Requires finite entries summing to 0 within 1e-12.
  explicit AdditiveScore(Vec entries);

  // Canonicalizing factory: subtracts the mean first.
  static AdditiveScore centered(Vec entries);

  static AdditiveScore zeros(int n) { return AdditiveScore(Vec(static_cast<std::size_t>(n), 0.0)); }

  int size() const { return static_cast<int>(v_.size()); }
  const Vec& entries() const { return v_; }
  double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }

 private:
  Vec v_;
};

// The extended parameter selecting a member of the ranking family:
// 0 (row means), a finite Hadamard scale k > 0, or the max-plus limit.
class KParameter {
 public:
  enum class Kind { zero, finite, infinite };

  static KParameter zero() { return KParameter(Kind::zero, 0.0); }
  static KParameter finite(double k);
  static KParameter infinity() { return KParameter(Kind::infinite, 0.0); }

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::zero; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_infinite() const { return kind_ == Kind::infinite; }

  // Finite variant only.
  double value() const;

  // Total order 0 < finite k < infinity, used for deterministic tie-breaks.
  double order_key() const;

  std::string str() const;

  // Accepts "0", "inf"/"infinity", or a positive decimal number.
  static KParameter parse(const std::string& text);

  friend bool operator==(const KParameter& a, const KParameter& b) {
    return a.kind_ == b.kind_ && a.k_ == b.k_;
  }

 private:
  KParameter(Kind kind, double k) : kind_(kind), k_(k) {}

  Kind kind_;
  double k_;
};

// Entrywise natural log; the skew flag of the result records whether the
// input was reciprocal.
AdditiveMatrix log_map(const PositiveMatrix& x);

// Entrywise exp(k * A_ij). Throws OverflowRisk when k * max|A_ij| exceeds
// kExpOverflowLimit.
PositiveMatrix exp_scale_map(const AdditiveMatrix& a, double k);

// Entrywise X_ij^k. Same overflow guard, applied to k * max|log X_ij|.
PositiveMatrix hadamard_power(const PositiveMatrix& x, double k);

struct RankOnePair {
  PositiveMatrix multiplicative;  // [exp(s_i - s_j)]
  AdditiveMatrix additive;        // [s_i - s_j]
};

// The consistent comparison matrix generated by a score.
RankOnePair rank_one_of(const AdditiveScore& s);

// Scales a positive vector to geometric mean 1. Throws NonPositiveEntry.
ProjectiveScore normalize_projective(const Vec& v);

// True iff |A_ij - A_ik - A_kj| <= tol for all triples (i,j,k).
bool is_strongly_transitive(const AdditiveMatrix& a, double tol);

// Canonical-form bridges between the two score pictures.
AdditiveScore log_score(const ProjectiveScore& s);
ProjectiveScore exp_score(const AdditiveScore& s);

}  // namespace pairrank

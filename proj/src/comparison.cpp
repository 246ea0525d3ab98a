#include "pairrank/comparison.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace pairrank {

namespace {

void require_dimension(int n) {
  if (n < 2) throw std::invalid_argument("comparison matrix dimension must be >= 2");
}

}  // namespace

PositiveMatrix::PositiveMatrix(Matrix entries) : m_(std::move(entries)) {
  require_dimension(m_.size());
  for (int i = 0; i < m_.size(); ++i)
    for (int j = 0; j < m_.size(); ++j) {
      double v = m_(i, j);
      if (!std::isfinite(v) || v <= 0.0)
        throw NonPositiveEntry("PositiveMatrix: entry (" + std::to_string(i) + "," +
                               std::to_string(j) + ") = " + std::to_string(v) +
                               " is not a positive real");
    }
}

bool PositiveMatrix::reciprocal(double tol) const {
  for (int i = 0; i < m_.size(); ++i)
    for (int j = i; j < m_.size(); ++j)
      if (std::abs(std::log(m_(i, j)) + std::log(m_(j, i))) > tol) return false;
  return true;
}

AdditiveMatrix::AdditiveMatrix(Matrix entries) : m_(std::move(entries)), skew_(true) {
  require_dimension(m_.size());
  if (!m_.all_finite()) throw std::invalid_argument("AdditiveMatrix: entries must be finite");
  for (int i = 0; i < m_.size() && skew_; ++i)
    for (int j = i; j < m_.size(); ++j)
      if (std::abs(m_(i, j) + m_(j, i)) > kSkewTol) {
        skew_ = false;
        break;
      }
}

ProjectiveScore::ProjectiveScore(Vec entries) : v_(std::move(entries)) {
  require_dimension(static_cast<int>(v_.size()));
  Vec logs(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (!std::isfinite(v_[i]) || v_[i] <= 0.0)
      throw NonPositiveEntry("ProjectiveScore: entries must be positive reals");
    logs[i] = std::log(v_[i]);
  }
  // |log gm| <= 1e-12 is the same as |gm - 1| <= 1e-12 at this tolerance.
  if (std::abs(mean(logs)) > 1e-12)
    throw std::invalid_argument("ProjectiveScore: geometric mean must be 1 (use normalize_projective)");
}

AdditiveScore::AdditiveScore(Vec entries) : v_(std::move(entries)) {
  require_dimension(static_cast<int>(v_.size()));
  for (double x : v_)
    if (!std::isfinite(x)) throw std::invalid_argument("AdditiveScore: entries must be finite");
  if (std::abs(kahan_sum(v_)) > 1e-12)
    throw std::invalid_argument("AdditiveScore: entries must sum to 0 (use AdditiveScore::centered)");
}

AdditiveScore AdditiveScore::centered(Vec entries) {
  for (double x : entries)
    if (!std::isfinite(x)) throw std::invalid_argument("AdditiveScore: entries must be finite");
  return AdditiveScore(pairrank::centered(std::move(entries)));
}

KParameter KParameter::finite(double k) {
  if (!std::isfinite(k) || k <= 0.0)
    throw std::invalid_argument("KParameter::finite: k must be a positive real");
  return KParameter(Kind::finite, k);
}

double KParameter::value() const {
  if (kind_ != Kind::finite) throw std::logic_error("KParameter::value: not a finite parameter");
  return k_;
}

double KParameter::order_key() const {
  switch (kind_) {
    case Kind::zero:
      return 0.0;
    case Kind::finite:
      return k_;
    case Kind::infinite:
      return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

std::string KParameter::str() const {
  switch (kind_) {
    case Kind::zero:
      return "0";
    case Kind::infinite:
      return "inf";
    case Kind::finite: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", k_);
      return buf;
    }
  }
  return "0";
}

KParameter KParameter::parse(const std::string& text) {
  if (text == "0") return zero();
  if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
  char* end = nullptr;
  double k = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || (end && *end != '\0'))
    throw std::invalid_argument("KParameter::parse: cannot parse '" + text + "'");
  if (k == 0.0) return zero();
  return finite(k);
}

AdditiveMatrix log_map(const PositiveMatrix& x) {
  const int n = x.size();
  Matrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = std::log(x(i, j));
  return AdditiveMatrix(std::move(a));
}

PositiveMatrix exp_scale_map(const AdditiveMatrix& a, double k) {
  if (!std::isfinite(k) || k <= 0.0) throw std::invalid_argument("exp_scale_map: k must be > 0");
  const int n = a.size();
  double max_arg = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) max_arg = std::max(max_arg, std::abs(k * a(i, j)));
  if (max_arg > kExpOverflowLimit)
    throw OverflowRisk("exp_scale_map: |k*A_ij| up to " + std::to_string(max_arg) +
                       " exceeds the exp() range; use the log-domain solver");
  Matrix x(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = std::exp(k * a(i, j));
  return PositiveMatrix(std::move(x));
}

PositiveMatrix hadamard_power(const PositiveMatrix& x, double k) {
  if (!std::isfinite(k) || k <= 0.0) throw std::invalid_argument("hadamard_power: k must be > 0");
  const int n = x.size();
  double max_arg = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) max_arg = std::max(max_arg, std::abs(k * std::log(x(i, j))));
  if (max_arg > kExpOverflowLimit)
    throw OverflowRisk("hadamard_power: |k*log X_ij| up to " + std::to_string(max_arg) +
                       " exceeds the exp() range; use the log-domain solver");
  Matrix y(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y(i, j) = std::pow(x(i, j), k);
  return PositiveMatrix(std::move(y));
}

RankOnePair rank_one_of(const AdditiveScore& s) {
  const int n = s.size();
  Matrix add(n), mult(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add(i, j) = s[i] - s[j];
      mult(i, j) = std::exp(s[i] - s[j]);
    }
  return RankOnePair{PositiveMatrix(std::move(mult)), AdditiveMatrix(std::move(add))};
}

ProjectiveScore normalize_projective(const Vec& v) {
  if (v.size() < 2) throw std::invalid_argument("normalize_projective: dimension must be >= 2");
  Vec logs(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i]) || v[i] <= 0.0)
      throw NonPositiveEntry("normalize_projective: entries must be positive reals");
    logs[i] = std::log(v[i]);
  }
  double log_gm = mean(logs);
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::exp(logs[i] - log_gm);
  return ProjectiveScore(std::move(out));
}

bool is_strongly_transitive(const AdditiveMatrix& a, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_strongly_transitive: tol must be > 0");
  const int n = a.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (std::abs(a(i, j) - a(i, k) - a(k, j)) > tol) return false;
  return true;
}

AdditiveScore log_score(const ProjectiveScore& s) {
  Vec logs(static_cast<std::size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) logs[static_cast<std::size_t>(i)] = std::log(s[i]);
  return AdditiveScore::centered(std::move(logs));
}

ProjectiveScore exp_score(const AdditiveScore& s) {
  Vec v(static_cast<std::size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) v[static_cast<std::size_t>(i)] = std::exp(s[i]);
  return normalize_projective(v);
}

}  // namespace pairrank

#pragma once

// Shared random generators for the test suites.

#include "pairrank/comparison.hpp"
#include "pairrank/matrix.hpp"
#include "pairrank/rng.hpp"

namespace pairrank::testing {

inline Matrix random_skew(int n, Rng& rng, double scale = 1.0) {
  Matrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double e = scale * rng.normal();
      a(i, j) = e;
      a(j, i) = -e;
    }
  return a;
}

// General log-comparison matrix: independent off-diagonal entries, zero diagonal.
inline Matrix random_additive(int n, Rng& rng, double scale = 1.0) {
  Matrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) a(i, j) = scale * rng.normal();
  return a;
}

inline Matrix random_positive(int n, Rng& rng, double log_scale = 1.0) {
  Matrix x(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = std::exp(log_scale * rng.normal());
  return x;
}

inline AdditiveScore random_score(int n, Rng& rng, double scale = 1.0) {
  Vec s(static_cast<std::size_t>(n));
  for (double& v : s) v = scale * rng.normal();
  return AdditiveScore::centered(std::move(s));
}

}  // namespace pairrank::testing

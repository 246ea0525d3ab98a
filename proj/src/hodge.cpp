#include "pairrank/hodge.hpp"

#include <cmath>

namespace pairrank {

ProjectiveScore hodge_score_multiplicative(const PositiveMatrix& x) {
  return exp_score(hodge_score_additive(log_map(x)));
}

AdditiveScore hodge_score_additive(const AdditiveMatrix& a) {
  const int n = a.size();
  Vec s = a.entries().row_sums();
  for (double& v : s) v /= static_cast<double>(n);
  return AdditiveScore::centered(std::move(s));
}

StProjection l2_project_to_st(const AdditiveMatrix& a) {
  const int n = a.size();
  Vec rows = a.entries().row_sums();
  Vec cols = a.entries().col_sums();
  Vec s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    s[static_cast<std::size_t>(i)] = (rows[static_cast<std::size_t>(i)] - cols[static_cast<std::size_t>(i)]) / (2.0 * n);
  AdditiveScore score = AdditiveScore::centered(std::move(s));
  Matrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = a(i, j) - (score[i] - score[j]);
  return StProjection{std::move(score), AdditiveMatrix(std::move(r))};
}

}  // namespace pairrank

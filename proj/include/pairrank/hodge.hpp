#pragma once

// Row-geometric-mean ranking (HodgeRank) and its characterization as the
// least-squares projection onto the consistent subspace.

#include "pairrank/comparison.hpp"

namespace pairrank {

// h(X)_i proportional to (prod_j X_ij)^(1/n), normalized to geometric mean 1.
// Computed as exp of row means of log X; the raw n-fold product would
// under/overflow quickly.
ProjectiveScore hodge_score_multiplicative(const PositiveMatrix& x);

// Centered row means, the additive form of the same map.
AdditiveScore hodge_score_additive(const AdditiveMatrix& a);

struct StProjection {
  AdditiveScore score;      // minimizer of ||A - [s_i - s_j]||_F over sum-zero s
  AdditiveMatrix residual;  // A - [s_i - s_j]
};

// Frobenius projection onto the span of the consistent matrices [s_i - s_j].
// For skew input this reduces to the centered row means; for general input it
// solves the normal equations s_i = (rowsum_i - colsum_i) / (2n).
StProjection l2_project_to_st(const AdditiveMatrix& a);

}  // namespace pairrank

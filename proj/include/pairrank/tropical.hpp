#pragma once

// Max-plus spectral theory on log-comparison matrices: max cycle mean
// (Karp), Kleene star (Floyd-Warshall dynamic program), critical nodes,
// eigenvector basis and uniqueness detection.
//
// All computation happens additively on log X; max-times results are
// obtained by exp at the boundary. Complete comparison matrices give a
// strongly connected digraph, so the max-plus eigenvalue always exists.

#include <optional>
#include <vector>

#include "pairrank/comparison.hpp"

namespace pairrank {

// Tolerance for detecting critical nodes and coinciding eigenvector columns.
inline constexpr double kCriticalTol = 1e-9;

struct TropicalEigenData {
  double lambda = 0.0;                     // max cycle mean, log-preference units
  std::vector<int> critical_nodes;         // nodes on some critical cycle
  std::vector<Vec> basis;                  // centered Kleene-star columns, deduplicated
  bool unique = false;                     // all critical columns coincide
  std::optional<AdditiveScore> eigenvector;  // present iff unique
};

// Thrown when a caller needs a unique tropical eigenvector and there is none;
// carries the full eigenvector description.
class NonUniqueTropical : public Error {
 public:
  NonUniqueTropical(const std::string& msg, TropicalEigenData eigen_data)
      : Error(msg), data(std::move(eigen_data)) {}

  TropicalEigenData data;
};

// Karp's algorithm: max over cycles of (cycle weight) / (cycle length).
double max_cycle_mean(const AdditiveMatrix& a);

// Max-weight walks of length >= 1 between all pairs (Floyd-Warshall in the
// max-plus semiring). Only valid when no cycle has positive weight; the
// -infinity sentinel stays internal to this module.
Matrix maxplus_closure(const Matrix& b);

// B* = I (+) B (+) B^2 (+) ... in max-plus arithmetic; entry (i,j) is the
// best path weight from i to j, with 0 on the diagonal from I. Throws
// PositiveCycle unless max_cycle_mean(B) <= kCriticalTol.
Matrix kleene_star(const AdditiveMatrix& b);

// Full max-plus eigendata of A: eigenvalue, critical nodes, eigenvector basis
// from the critical columns of (A - lambda)*, and the uniqueness verdict.
// Non-uniqueness is data here, not an error.
TropicalEigenData tropical_eigen(const AdditiveMatrix& a);

// Max-times principal eigenvector of X, i.e. exp of the max-plus eigenvector
// of log X, geometric mean 1. Throws NonUniqueTropical when the eigenvector
// is not projectively unique.
ProjectiveScore tropical_score(const PositiveMatrix& x);

}  // namespace pairrank

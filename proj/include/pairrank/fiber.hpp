#pragma once

// Fiber geometry of the ranking family: sampling matrices with a prescribed
// Perron pair (the one-dimensional positive Kalman variety), membership
// certificates for the zero fiber, and the decomposition of any matrix into
// score part + per-row zero-fiber components + a constant matrix.
//
// The zero fiber at parameter k splits into independent per-row pieces:
//   finite k : rows a with a_j < 0 and sum_j exp(k a_j) = 1
//   k = 0    : rows summing to 0
//   k = inf  : nonpositive rows with at least one zero entry
// plus any real multiple of the all-ones matrix.

#include <cstdint>
#include <vector>

#include "pairrank/comparison.hpp"
#include "pairrank/perron.hpp"

namespace pairrank {

// n rows, each strictly inside the (n-1)-simplex.
class SimplexRows {
 public:
  SimplexRows(int n, std::vector<Vec> rows);

  int size() const { return n_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const Vec& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

 private:
  int n_;
  std::vector<Vec> rows_;
};

struct FiberCertificate {
  KParameter k = KParameter::zero();
  AdditiveScore score;            // the value the family maps the matrix to
  double c = 0.0;                 // coefficient of the all-ones matrix
  std::vector<Vec> row_components;  // row i's zero-fiber component
  double max_defect = 0.0;        // largest violation of the row membership equations
};

// Reassembles [s_i - s_j] + row_components + c * ones; certificates satisfy
// reconstruct(cert) == original within the stated defect.
AdditiveMatrix reconstruct(const FiberCertificate& cert);

class NotInFiber : public Error {
 public:
  NotInFiber(const std::string& msg, Vec sums) : Error(msg), row_sums(std::move(sums)) {}

  Vec row_sums;
};

class NotInZeroFiber : public Error {
 public:
  NotInZeroFiber(const std::string& msg, Vec stats, double spread_seen)
      : Error(msg), row_statistics(std::move(stats)), spread(spread_seen) {}

  Vec row_statistics;  // per-row membership statistic (see zero_fiber_certificate)
  double spread;
};

// Uniform rows on the open simplex: per-row Dirichlet(1,...,1) via normalized
// standard exponentials.
SimplexRows sample_simplex_rows(int n, std::uint64_t seed);

// X_ij = lambda * w_i * y_ij / w_j; by construction v(X) = w, lambda(X) = lambda.
PositiveMatrix kalman_assemble(const ProjectiveScore& w, double lambda, const SimplexRows& y);

// Uniformly sampled element of the fiber with Perron pair (w, lambda).
PositiveMatrix kalman_sample(const ProjectiveScore& w, double lambda, std::uint64_t seed);

// Y_ij = X_ij * w_j / (lambda * w_i). Returns the simplex rows when every row
// sums to 1 within tol (i.e. X has Perron pair (w, lambda)); otherwise throws
// NotInFiber carrying the row sums.
SimplexRows psi_map(const PositiveMatrix& x, const ProjectiveScore& w, double lambda,
                    double tol = 1e-9);

// Zero-fiber membership test and canonical (rows, c) split. The per-row
// statistic whose spread is tested against tol is:
//   finite k : (1/k) log sum_j exp(k A_ij)   (log-sum-exp, stabilized)
//   k = 0    : row sum
//   k = inf  : row maximum
// Membership requires all statistics equal within tol; c is then the unique
// constant making each centered row satisfy its membership equation.
// Throws NotInZeroFiber with the statistics on rejection.
FiberCertificate zero_fiber_certificate(const AdditiveMatrix& a, const KParameter& k,
                                        double tol = 1e-9);

// Full decomposition of an arbitrary matrix: score from the ranking family,
// then the zero-fiber certificate of the remainder. A membership failure here
// is an InternalInconsistency (solver bug), not bad input.
FiberCertificate fiber_decompose(const AdditiveMatrix& a, const KParameter& k,
                                 const SolverConfig& cfg = {});

// Random element of the zero fiber shifted by c * ones. The k = inf sampler
// places one zero per row (the generic stratum); multi_zero forces a second
// zero to reach the lower-dimensional strata.
AdditiveMatrix sample_zero_fiber(int n, const KParameter& k, std::uint64_t seed, double c = 0.0,
                                 bool multi_zero = false);

}  // namespace pairrank

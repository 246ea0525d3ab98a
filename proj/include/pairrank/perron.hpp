#pragma once

// Principal (Perron) eigenpair computation and the ranking family built on
// it, numerically stable across the whole parameter range via log-domain
// power iteration.
//
// perron_pair        : plain power iteration on a positive matrix
// log_perron_score   : the log version -- iterates log-sum-exp applications
//                      of k*A without ever materializing exp(k*A), so scale
//                      parameters up to ~1e4 are usable without overflow
// perron_family_score: dispatch over k in {0} u (0,inf) u {inf}: row means,
//                      log-domain Perron vector, or max-plus eigenvector

#include "pairrank/comparison.hpp"
#include "pairrank/hodge.hpp"
#include "pairrank/tropical.hpp"

namespace pairrank {

struct SolverConfig {
  double tol = 1e-12;
  int max_iter = 10000;
};

struct PerronPair {
  ProjectiveScore v;  // geometric mean 1
  double lambda;      // spectral radius
  int iterations;
  double residual;    // ||Xv - lambda v||_inf / (lambda ||v||_inf)
};

// Power iteration from the barycenter (deterministic start; positive
// matrices converge globally). Throws NoConvergence with the residual
// achieved after cfg.max_iter steps.
PerronPair perron_pair(const PositiveMatrix& x, const SolverConfig& cfg = {});

struct LogPerronScore {
  AdditiveScore score;  // (1/k) log v(exp(kA)), sum zero
  double log_lambda;    // (1/k) log lambda(exp(kA))
  int iterations;
  double residual;      // max_i |LSE(kA,y)_i - y_i - log lambda| at y = k*score
};

// One log-sum-exp application: y_i = log sum_j exp(m_ij + x_j), evaluated
// with a per-row max shift.
Vec lse_apply(const Matrix& m, const Vec& x);

// Log-domain power iteration for the score at finite k > 0. Convergence is
// measured on the centered iterate y = k*x with threshold cfg.tol * k, so
// the returned score has k-independent accuracy.
LogPerronScore log_perron_score(const AdditiveMatrix& a, double k, const SolverConfig& cfg = {});

// The full family: k = 0 row means, finite k log-domain Perron vector,
// k = inf max-plus eigenvector (NonUniqueTropical if there are several).
// Output is always a sum-zero additive score.
AdditiveScore perron_family_score(const AdditiveMatrix& a, const KParameter& k,
                                  const SolverConfig& cfg = {});
AdditiveScore perron_family_score(const PositiveMatrix& x, const KParameter& k,
                                  const SolverConfig& cfg = {});

}  // namespace pairrank

#pragma once

// First-order perturbation analysis of the principal eigenvector around a
// consistent matrix: the centered perturbation, its smallness parameter, the
// linear eigenvector estimate, and a checker for the error bound.
//
// Given a score s and an observed matrix X, the multiplicative perturbation
// is xi_ij = s_j/s_i * X_ij; its centered version for a constant kappa >= 1
// is Xi = xi - kappa*ones - (1-kappa)*I (zero exactly when X is the
// consistent matrix of s, since v(kappa*ones + (1-kappa)*I) = ones). When
//
//   rho = (2||Xi|| / (n*kappa - 2||Xi||))^2 < 1/2
//
// the eigenvector satisfies v(X) = s .* (ones + (r - rbar)/(kappa n) + eps)
// with r = Xi*ones and, writing delta = sqrt(rho),
// ||eps||_2 < delta/(1-delta) * ||Xi|| / (kappa sqrt(n)) -- a bound quadratic
// in ||Xi||, matching the second-order remainder of the linear model.

#include "pairrank/comparison.hpp"
#include "pairrank/perron.hpp"

namespace pairrank {

struct PerturbationReport {
  double kappa;
  PositiveMatrix xi;        // [s_j/s_i * X_ij]
  Matrix centered_xi;       // Xi = xi - kappa*ones - (1-kappa)*I
  double norm_xi;           // operator (spectral) norm of Xi
  double rho;               // +inf when n*kappa - 2||Xi|| <= 0
  Vec r;                    // row sums of Xi
  double r_bar;             // mean of r
  Vec linear_estimate;      // s_i * (1 + (r_i - r_bar)/(kappa n))
  double epsilon_bound;     // delta/(1-delta) * ||Xi|| / (kappa sqrt(n)), delta = sqrt(rho)
  bool applicable;          // rho < 1/2
};

// Largest singular value via power iteration on M^T M, to relative accuracy
// tol. Zero matrix gives 0; no error paths.
double spectral_norm(const Matrix& m, double tol);

// Populates every report field from (X, s, kappa). A nonpositive denominator
// in rho is reported as rho = +inf with applicable = false rather than thrown.
PerturbationReport build_report(const PositiveMatrix& x, const ProjectiveScore& s,
                                double kappa = 1.0);

struct BoundCheck {
  bool passed;
  double observed_epsilon_norm;  // ||eps||_2 reconstructed from the exact v(X)
  double bound;
  double margin;                 // bound - observed
  double fit_scale;              // projective scale chosen for v(X)/s
};

// Computes the exact v(X), extracts eps from the linear model, and checks
// the bound. The projective scale of v(X) is fixed by the least-squares
// scalar c minimizing ||c * v(X)/s - (ones + (r - rbar)/(kappa n))||_2; the
// chosen c is reported so alternate normalizations can be recomputed.
// Throws NotApplicable when rho >= 1/2.
BoundCheck verify_epsilon_bound(const PositiveMatrix& x, const ProjectiveScore& s,
                                double kappa = 1.0, const SolverConfig& cfg = {});

}  // namespace pairrank

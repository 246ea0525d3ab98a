#include "pairrank/perturbation.hpp"

#include <cmath>
#include <algorithm>
#include <limits>

#include "pairrank/rng.hpp"

namespace pairrank {

double spectral_norm(const Matrix& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("spectral_norm: tol must be > 0");
  const int n = m.size();
  if (n == 0) return 0.0;

  // Fixed-seed random start: deterministic across runs, and almost surely
  // not orthogonal to the top singular vector.
  Rng rng(0x5EC7124A11AB1DEull);
  Vec v(static_cast<std::size_t>(n));
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  double nv = norm2(v);
  for (double& x : v) x /= nv;

  double sigma = 0.0;
  int stall = 0;
  const int max_iter = 200000;
  for (int iter = 0; iter < max_iter; ++iter) {
    Vec w = m.apply(v);
    double next = norm2(w);  // = sqrt(v^T M^T M v) for unit v
    if (next == 0.0) return 0.0;
    Vec u = m.apply_transpose(w);
    double nu = norm2(u);
    if (nu == 0.0) return next;
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)] / nu;
    // The Rayleigh estimate is nondecreasing for M^T M; stop once it stalls
    // below the requested relative accuracy for a few consecutive steps.
    if (std::abs(next - sigma) <= tol * next) {
      if (++stall >= 3) return next;
    } else {
      stall = 0;
    }
    sigma = next;
  }
  return sigma;
}

PerturbationReport build_report(const PositiveMatrix& x, const ProjectiveScore& s, double kappa) {
  if (!(kappa >= 1.0)) throw std::invalid_argument("build_report: kappa must be >= 1");
  const int n = x.size();
  if (s.size() != n) throw std::invalid_argument("build_report: dimension mismatch");

  Matrix xi(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) xi(i, j) = s[j] / s[i] * x(i, j);

  Matrix cxi(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cxi(i, j) = xi(i, j) - kappa - (i == j ? (1.0 - kappa) : 0.0);

  double norm_xi = spectral_norm(cxi, 1e-12);
  double denom = n * kappa - 2.0 * norm_xi;
  double rho = denom > 0.0 ? std::pow(2.0 * norm_xi / denom, 2)
                           : std::numeric_limits<double>::infinity();

  Vec r = cxi.row_sums();
  double r_bar = mean(r);

  Vec estimate(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    estimate[static_cast<std::size_t>(i)] =
        s[i] * (1.0 + (r[static_cast<std::size_t>(i)] - r_bar) / (kappa * n));

  // The error bound is first order in the smallness parameter
  // delta = 2||Xi|| / (n kappa - 2||Xi||) = sqrt(rho), hence quadratic in
  // ||Xi|| overall: the residual of the linear eigenvector model is a
  // genuine second-order quantity for n >= 3 (halving the perturbation
  // divides the bound by 4). A delta^2 factor here would claim a cubic
  // bound, which the second-order remainder violates as ||Xi|| -> 0.
  double delta = denom > 0.0 ? 2.0 * norm_xi / denom : std::numeric_limits<double>::infinity();
  double bound = delta < 1.0 ? delta / (1.0 - delta) * norm_xi / (kappa * std::sqrt(n))
                             : std::numeric_limits<double>::infinity();

  return PerturbationReport{kappa,
                            PositiveMatrix(std::move(xi)),
                            std::move(cxi),
                            norm_xi,
                            rho,
                            std::move(r),
                            r_bar,
                            std::move(estimate),
                            bound,
                            rho < 0.5};
}

BoundCheck verify_epsilon_bound(const PositiveMatrix& x, const ProjectiveScore& s, double kappa,
                                const SolverConfig& cfg) {
  PerturbationReport report = build_report(x, s, kappa);
  if (!report.applicable)
    throw NotApplicable("verify_epsilon_bound: rho = " + std::to_string(report.rho) +
                        " is not below 1/2");
  const int n = x.size();

  PerronPair pair = perron_pair(x, cfg);

  // target t = ones + (r - rbar)/(kappa n); ratio u = v(X)/s up to scale
  Vec t(static_cast<std::size_t>(n)), u(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    t[static_cast<std::size_t>(i)] =
        1.0 + (report.r[static_cast<std::size_t>(i)] - report.r_bar) / (kappa * n);
    u[static_cast<std::size_t>(i)] = pair.v[i] / s[i];
  }
  double c = dot(u, t) / dot(u, u);

  Vec eps(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    eps[static_cast<std::size_t>(i)] = c * u[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(i)];
  double observed = norm2(eps);

  // absorb rounding in the exact-zero case: the bound is open, so equality
  // only occurs at 0 = 0
  bool passed = observed < report.epsilon_bound + 1e-14;
  return BoundCheck{passed, observed, report.epsilon_bound, report.epsilon_bound - observed, c};
}

}  // namespace pairrank

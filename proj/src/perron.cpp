#include "pairrank/perron.hpp"

#include <cmath>
#include <limits>
#include <algorithm>

namespace pairrank {

namespace {

void validate(const SolverConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("SolverConfig: tol must be > 0");
  if (cfg.max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
}

}  // namespace

PerronPair perron_pair(const PositiveMatrix& x, const SolverConfig& cfg) {
  validate(cfg);
  const int n = x.size();
  Vec v(static_cast<std::size_t>(n), 1.0);
  double residual = std::numeric_limits<double>::infinity();
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    Vec y = x.entries().apply(v);
    double lambda = dot(y, v) / dot(v, v);
    residual = 0.0;
    for (int i = 0; i < n; ++i)
      residual = std::max(residual, std::abs(y[static_cast<std::size_t>(i)] - lambda * v[static_cast<std::size_t>(i)]));
    residual /= lambda * max_abs(v);
    if (residual <= cfg.tol)
      return PerronPair{ProjectiveScore(std::move(v)), lambda, iter, residual};
    // renormalize to geometric mean 1 so the iterate stays in canonical form
    Vec logs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) logs[static_cast<std::size_t>(i)] = std::log(y[static_cast<std::size_t>(i)]);
    double log_gm = mean(logs);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = std::exp(logs[static_cast<std::size_t>(i)] - log_gm);
  }
  throw NoConvergence("perron_pair: no convergence after " + std::to_string(cfg.max_iter) +
                          " iterations (residual " + std::to_string(residual) + ")",
                      residual, cfg.max_iter);
}

Vec lse_apply(const Matrix& m, const Vec& x) {
  const int n = m.size();
  Vec y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double shift = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) shift = std::max(shift, m(i, j) + x[static_cast<std::size_t>(j)]);
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += std::exp(m(i, j) + x[static_cast<std::size_t>(j)] - shift);
    y[static_cast<std::size_t>(i)] = shift + std::log(acc);
  }
  return y;
}

LogPerronScore log_perron_score(const AdditiveMatrix& a, double k, const SolverConfig& cfg) {
  validate(cfg);
  if (!std::isfinite(k) || k <= 0.0)
    throw std::invalid_argument("log_perron_score: k must be a positive real");
  const int n = a.size();
  Matrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = k * a(i, j);

  const double threshold = cfg.tol * k;
  Vec y(static_cast<std::size_t>(n), 0.0);  // barycenter start
  double delta = std::numeric_limits<double>::infinity();
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    Vec raw = lse_apply(m, y);
    // For very small k the requested threshold tol*k can drop below the
    // rounding noise of the update itself; a step at that level means the
    // iterate is converged to machine precision, so accept it.
    double noise_floor =
        0.5 * std::numeric_limits<double>::epsilon() * (1.0 + max_abs(raw));
    Vec z = centered(std::move(raw));
    // Half-damped update. The plain iterate oscillates for large k: the
    // linearization eigenvalues approach roots of unity when the critical
    // cycle of A has length >= 2, so consecutive applications cycle instead
    // of contracting. Averaging with the previous iterate moves an eigenvalue
    // mu to (1 + mu)/2, whose modulus stays below ~cos(pi/n) uniformly in k.
    // The fixed point is unchanged.
    for (int i = 0; i < n; ++i)
      z[static_cast<std::size_t>(i)] = 0.5 * (z[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)]);
    delta = inf_distance(z, y);
    y = std::move(z);
    if (delta <= std::max(threshold, noise_floor)) {
      // one more application measures the fixed-point defect of the returned
      // iterate and pins the eigenvalue estimate to it
      Vec z2 = lse_apply(m, y);
      double log_lambda = mean(z2);  // mean(y) = 0, so this is mean(z2 - y)
      double residual = 0.0;
      for (int i = 0; i < n; ++i)
        residual = std::max(residual, std::abs(z2[static_cast<std::size_t>(i)] -
                                               y[static_cast<std::size_t>(i)] - log_lambda));
      Vec score = y;
      for (double& s : score) s /= k;
      return LogPerronScore{AdditiveScore::centered(std::move(score)), log_lambda / k, iter,
                            residual};
    }
  }
  throw NoConvergence("log_perron_score: no convergence after " + std::to_string(cfg.max_iter) +
                          " iterations at k = " + std::to_string(k) + " (last step " +
                          std::to_string(delta) + ", threshold " + std::to_string(threshold) + ")",
                      delta, cfg.max_iter);
}

AdditiveScore perron_family_score(const AdditiveMatrix& a, const KParameter& k,
                                  const SolverConfig& cfg) {
  switch (k.kind()) {
    case KParameter::Kind::zero:
      return hodge_score_additive(a);
    case KParameter::Kind::finite:
      return log_perron_score(a, k.value(), cfg).score;
    case KParameter::Kind::infinite: {
      TropicalEigenData data = tropical_eigen(a);
      if (!data.unique) {
        std::string msg = "perron_family_score: tropical eigenvector is not unique (" +
                          std::to_string(data.basis.size()) + " basis vectors)";
        throw NonUniqueTropical(msg, std::move(data));
      }
      return *data.eigenvector;
    }
  }
  throw std::logic_error("perron_family_score: unreachable");
}

AdditiveScore perron_family_score(const PositiveMatrix& x, const KParameter& k,
                                  const SolverConfig& cfg) {
  return perron_family_score(log_map(x), k, cfg);
}

}  // namespace pairrank

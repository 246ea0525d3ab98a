#include "pairrank/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pairrank {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

double max_cycle_mean(const AdditiveMatrix& a) {
  const int n = a.size();
  // d[k][v] = max weight of a walk with exactly k edges from node 0 to v.
  // The comparison digraph is complete, so node 0 reaches every cycle.
  std::vector<Vec> d(static_cast<std::size_t>(n) + 1, Vec(static_cast<std::size_t>(n), kNegInf));
  d[0][0] = 0.0;
  for (int k = 1; k <= n; ++k) {
    for (int v = 0; v < n; ++v) {
      double best = kNegInf;
      for (int u = 0; u < n; ++u) {
        double prev = d[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(u)];
        if (prev == kNegInf) continue;
        best = std::max(best, prev + a(u, v));
      }
      d[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] = best;
    }
  }
  double lambda = kNegInf;
  for (int v = 0; v < n; ++v) {
    double dn = d[static_cast<std::size_t>(n)][static_cast<std::size_t>(v)];
    if (dn == kNegInf) continue;
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      double dk = d[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)];
      if (dk == kNegInf) continue;
      worst = std::min(worst, (dn - dk) / static_cast<double>(n - k));
    }
    lambda = std::max(lambda, worst);
  }
  return lambda;
}

Matrix maxplus_closure(const Matrix& b) {
  const int n = b.size();
  Matrix d = b;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      double dik = d(i, k);
      if (dik == kNegInf) continue;
      for (int j = 0; j < n; ++j) {
        double dkj = d(k, j);
        if (dkj == kNegInf) continue;
        d(i, j) = std::max(d(i, j), dik + dkj);
      }
    }
  return d;
}

Matrix kleene_star(const AdditiveMatrix& b) {
  double lambda = max_cycle_mean(b);
  if (lambda > kCriticalTol)
    throw PositiveCycle("kleene_star: max cycle mean " + std::to_string(lambda) +
                        " is positive; the star series diverges");
  Matrix star = maxplus_closure(b.entries());
  for (int i = 0; i < star.size(); ++i) star(i, i) = std::max(star(i, i), 0.0);
  return star;
}

TropicalEigenData tropical_eigen(const AdditiveMatrix& a) {
  const int n = a.size();
  TropicalEigenData out;
  out.lambda = max_cycle_mean(a);

  Matrix b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = a(i, j) - out.lambda;
  Matrix closure = maxplus_closure(b);

  // Critical nodes sit on a cycle of mean lambda: the best cycle through them
  // in B has weight 0 (up to rounding; it is never above kCriticalTol).
  for (int i = 0; i < n; ++i)
    if (std::abs(closure(i, i)) <= kCriticalTol) out.critical_nodes.push_back(i);

  for (int j : out.critical_nodes) {
    Vec col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      col[static_cast<std::size_t>(i)] = (i == j) ? std::max(closure(i, j), 0.0) : closure(i, j);
    col = centered(std::move(col));
    bool duplicate = false;
    for (const Vec& existing : out.basis)
      if (inf_distance(existing, col) <= kCriticalTol) {
        duplicate = true;
        break;
      }
    if (!duplicate) out.basis.push_back(std::move(col));
  }

  out.unique = out.basis.size() == 1;
  if (out.unique) out.eigenvector = AdditiveScore::centered(out.basis.front());
  return out;
}

ProjectiveScore tropical_score(const PositiveMatrix& x) {
  TropicalEigenData data = tropical_eigen(log_map(x));
  if (!data.unique) {
    std::string msg = "tropical_score: the max-times eigenvector is not unique (" +
                      std::to_string(data.basis.size()) + " basis vectors)";
    throw NonUniqueTropical(msg, std::move(data));
  }
  return exp_score(*data.eigenvector);
}

}  // namespace pairrank

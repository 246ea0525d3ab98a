#include "pairrank/fiber.hpp"

#include <algorithm>
#include <cmath>

#include "pairrank/rng.hpp"

namespace pairrank {

namespace {

// (1/k) log sum_j exp(k a_j), max-shifted.
double scaled_lse(const Vec& row, double k) {
  double shift = -std::numeric_limits<double>::infinity();
  for (double a : row) shift = std::max(shift, k * a);
  double acc = 0.0;
  for (double a : row) acc += std::exp(k * a - shift);
  return (shift + std::log(acc)) / k;
}

Vec row_statistics(const AdditiveMatrix& a, const KParameter& k) {
  const int n = a.size();
  Vec stats(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vec row = a.entries().row(i);
    switch (k.kind()) {
      case KParameter::Kind::finite:
        stats[static_cast<std::size_t>(i)] = scaled_lse(row, k.value());
        break;
      case KParameter::Kind::zero:
        stats[static_cast<std::size_t>(i)] = kahan_sum(row);
        break;
      case KParameter::Kind::infinite:
        stats[static_cast<std::size_t>(i)] = *std::max_element(row.begin(), row.end());
        break;
    }
  }
  return stats;
}

// Largest violation of the per-row membership equation after removing c.
double membership_defect(const AdditiveMatrix& a, const KParameter& k, double c) {
  const int n = a.size();
  double defect = 0.0;
  for (int i = 0; i < n; ++i) {
    Vec row = a.entries().row(i);
    for (double& v : row) v -= c;
    switch (k.kind()) {
      case KParameter::Kind::finite: {
        double acc = 0.0;
        for (double v : row) acc += std::exp(k.value() * v);
        defect = std::max(defect, std::abs(acc - 1.0));
        break;
      }
      case KParameter::Kind::zero:
        defect = std::max(defect, std::abs(kahan_sum(row)));
        break;
      case KParameter::Kind::infinite:
        defect = std::max(defect, std::abs(*std::max_element(row.begin(), row.end())));
        break;
    }
  }
  return defect;
}

}  // namespace

SimplexRows::SimplexRows(int n, std::vector<Vec> rows) : n_(n), rows_(std::move(rows)) {
  if (n_ < 2) throw std::invalid_argument("SimplexRows: dimension must be >= 2");
  if (rows_.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("SimplexRows: expected n rows");
  for (const Vec& row : rows_) {
    if (row.size() != static_cast<std::size_t>(n_))
      throw std::invalid_argument("SimplexRows: row length mismatch");
    for (double v : row)
      if (!std::isfinite(v) || v <= 0.0)
        throw NonPositiveEntry("SimplexRows: entries must be strictly positive");
    if (std::abs(kahan_sum(row) - 1.0) > 1e-12)
      throw std::invalid_argument("SimplexRows: each row must sum to 1");
  }
}

AdditiveMatrix reconstruct(const FiberCertificate& cert) {
  const int n = cert.score.size();
  Matrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = cert.score[i] - cert.score[j] +
                cert.row_components[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                cert.c;
  return AdditiveMatrix(std::move(a));
}

SimplexRows sample_simplex_rows(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sample_simplex_rows: dimension must be >= 2");
  Rng rng(seed);
  std::vector<Vec> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vec row(static_cast<std::size_t>(n));
    double total = 0.0;
    for (double& v : row) {
      v = rng.exponential();
      total += v;
    }
    for (double& v : row) v /= total;
    rows.push_back(std::move(row));
  }
  return SimplexRows(n, std::move(rows));
}

PositiveMatrix kalman_assemble(const ProjectiveScore& w, double lambda, const SimplexRows& y) {
  if (!std::isfinite(lambda) || lambda <= 0.0)
    throw std::invalid_argument("kalman_assemble: lambda must be > 0");
  const int n = w.size();
  if (y.size() != n) throw std::invalid_argument("kalman_assemble: dimension mismatch");
  Matrix x(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      x(i, j) = lambda * w[i] * y.row(i)[static_cast<std::size_t>(j)] / w[j];
  return PositiveMatrix(std::move(x));
}

PositiveMatrix kalman_sample(const ProjectiveScore& w, double lambda, std::uint64_t seed) {
  return kalman_assemble(w, lambda, sample_simplex_rows(w.size(), seed));
}

SimplexRows psi_map(const PositiveMatrix& x, const ProjectiveScore& w, double lambda, double tol) {
  if (!std::isfinite(lambda) || lambda <= 0.0)
    throw std::invalid_argument("psi_map: lambda must be > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("psi_map: tol must be > 0");
  const int n = x.size();
  if (w.size() != n) throw std::invalid_argument("psi_map: dimension mismatch");

  std::vector<Vec> rows(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n)));
  Vec sums(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          x(i, j) * w[j] / (lambda * w[i]);
    sums[static_cast<std::size_t>(i)] = kahan_sum(rows[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < n; ++i)
    if (std::abs(sums[static_cast<std::size_t>(i)] - 1.0) > tol) {
      std::string msg = "psi_map: row " + std::to_string(i) + " sums to " +
                        std::to_string(sums[static_cast<std::size_t>(i)]) +
                        "; the matrix does not have Perron pair (w, lambda)";
      throw NotInFiber(msg, std::move(sums));
    }
  // renormalize the accepted rows so the result meets the simplex invariant
  for (int i = 0; i < n; ++i)
    for (double& v : rows[static_cast<std::size_t>(i)]) v /= sums[static_cast<std::size_t>(i)];
  return SimplexRows(n, std::move(rows));
}

FiberCertificate zero_fiber_certificate(const AdditiveMatrix& a, const KParameter& k, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("zero_fiber_certificate: tol must be > 0");
  const int n = a.size();
  Vec stats = row_statistics(a, k);
  double spread = *std::max_element(stats.begin(), stats.end()) -
                  *std::min_element(stats.begin(), stats.end());
  if (spread > tol)
    throw NotInZeroFiber("zero_fiber_certificate: row statistics spread " +
                             std::to_string(spread) + " exceeds tolerance " + std::to_string(tol),
                         std::move(stats), spread);

  double c = mean(stats);
  if (k.is_zero()) c /= static_cast<double>(n);  // statistic is the row sum = n*c

  std::vector<Vec> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vec row = a.entries().row(i);
    for (double& v : row) v -= c;
    rows.push_back(std::move(row));
  }
  double defect = membership_defect(a, k, c);
  return FiberCertificate{k, AdditiveScore::zeros(n), c, std::move(rows), defect};
}

FiberCertificate fiber_decompose(const AdditiveMatrix& a, const KParameter& k,
                                 const SolverConfig& cfg) {
  const int n = a.size();
  AdditiveScore score = perron_family_score(a, k, cfg);
  Matrix rem(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rem(i, j) = a(i, j) - (score[i] - score[j]);
  FiberCertificate cert = [&] {
    try {
      return zero_fiber_certificate(AdditiveMatrix(std::move(rem)), k, 100.0 * cfg.tol);
    } catch (const NotInZeroFiber& e) {
      throw InternalInconsistency(
          "fiber_decompose: remainder failed the zero-fiber test (spread " +
          std::to_string(e.spread) + "); this is a solver bug");
    }
  }();
  cert.score = std::move(score);
  return cert;
}

AdditiveMatrix sample_zero_fiber(int n, const KParameter& k, std::uint64_t seed, double c,
                                 bool multi_zero) {
  if (n < 2) throw std::invalid_argument("sample_zero_fiber: dimension must be >= 2");
  if (!std::isfinite(c)) throw std::invalid_argument("sample_zero_fiber: c must be finite");
  Matrix a(n);
  switch (k.kind()) {
    case KParameter::Kind::finite: {
      SimplexRows p = sample_simplex_rows(n, seed);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          a(i, j) = std::log(p.row(i)[static_cast<std::size_t>(j)]) / k.value() + c;
      break;
    }
    case KParameter::Kind::zero: {
      Rng rng(seed);
      for (int i = 0; i < n; ++i) {
        Vec row(static_cast<std::size_t>(n));
        for (double& v : row) v = rng.normal();
        row = centered(std::move(row));
        for (int j = 0; j < n; ++j) a(i, j) = row[static_cast<std::size_t>(j)] + c;
      }
      break;
    }
    case KParameter::Kind::infinite: {
      Rng rng(seed);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = -rng.uniform01();
        int z0 = rng.uniform_int(0, n - 1);
        a(i, z0) = 0.0;
        if (multi_zero) {
          int z1 = rng.uniform_int(0, n - 2);
          if (z1 >= z0) ++z1;
          a(i, z1) = 0.0;
        }
        for (int j = 0; j < n; ++j) a(i, j) += c;
      }
      break;
    }
  }
  return AdditiveMatrix(std::move(a));
}

}  // namespace pairrank

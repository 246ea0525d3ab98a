#include "pairrank/recovery.hpp"

#include <algorithm>
#include <cmath>

#include "pairrank/rng.hpp"

namespace pairrank {

namespace {

// stream tag separating the random-truth draw from the per-trial noise seeds
constexpr std::uint64_t kTruthStream = 0x7472757468ull;

AdditiveScore random_truth(int n, double scale, std::uint64_t seed) {
  Rng rng(seed);
  Vec s(static_cast<std::size_t>(n));
  for (double& v : s) v = scale * rng.normal();
  return AdditiveScore::centered(std::move(s));
}

bool lower_is_better(Objective o) { return o != Objective::top_one; }

bool has_ties(const AdditiveScore& s) {
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j]) return true;
  return false;
}

}  // namespace

const char* objective_name(Objective o) {
  switch (o) {
    case Objective::kendall_tau:
      return "kendall_tau";
    case Objective::l2_additive:
      return "l2_additive";
    case Objective::top_one:
      return "top_one";
  }
  return "?";
}

Objective parse_objective(const std::string& name) {
  if (name == "kendall_tau" || name == "kendall") return Objective::kendall_tau;
  if (name == "l2_additive" || name == "l2") return Objective::l2_additive;
  if (name == "top_one" || name == "top1") return Objective::top_one;
  throw std::invalid_argument("unknown objective '" + name + "'");
}

NoiseModel NoiseModel::log_normal_skew(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("NoiseModel: sigma must be > 0");
  return NoiseModel(Kind::log_normal_skew, sigma);
}

NoiseModel NoiseModel::uniform_skew(double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("NoiseModel: delta must be > 0");
  return NoiseModel(Kind::uniform_skew, delta);
}

NoiseModel NoiseModel::log_normal_free(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("NoiseModel: sigma must be > 0");
  return NoiseModel(Kind::log_normal_free, sigma);
}

AdditiveMatrix generate_observation(const AdditiveScore& s, const NoiseModel& noise,
                                    std::uint64_t seed) {
  const int n = s.size();
  Rng rng(seed);
  Matrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = s[i] - s[j];
  switch (noise.kind) {
    case NoiseModel::Kind::log_normal_skew:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          double e = noise.param * rng.normal();
          a(i, j) += e;
          a(j, i) -= e;
        }
      break;
    case NoiseModel::Kind::uniform_skew:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          double e = rng.uniform(-noise.param, noise.param);
          a(i, j) += e;
          a(j, i) -= e;
        }
      break;
    case NoiseModel::Kind::log_normal_free:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) a(i, j) += noise.param * rng.normal();
      break;
  }
  return AdditiveMatrix(std::move(a));
}

std::map<Objective, double> evaluate_objectives(const AdditiveScore& estimated,
                                                const AdditiveScore& truth,
                                                const std::vector<Objective>& objectives) {
  const int n = estimated.size();
  if (truth.size() != n) throw std::invalid_argument("evaluate_objectives: dimension mismatch");
  std::map<Objective, double> out;
  for (Objective o : objectives) {
    switch (o) {
      case Objective::kendall_tau: {
        double discord = 0.0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            double dt = truth[i] - truth[j];
            double de = estimated[i] - estimated[j];
            if (dt == 0.0 && de == 0.0) continue;  // tied in both: agreement
            if (dt == 0.0 || de == 0.0)
              discord += 0.5;  // tie on one side counts half
            else if (dt * de < 0.0)
              discord += 1.0;
          }
        out[o] = discord / (0.5 * n * (n - 1));
        break;
      }
      case Objective::l2_additive: {
        Vec diff(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) diff[static_cast<std::size_t>(i)] = estimated[i] - truth[i];
        out[o] = norm2(diff);
        break;
      }
      case Objective::top_one: {
        int amax_e = 0, amax_t = 0;
        bool tie_e = false, tie_t = false;
        for (int i = 1; i < n; ++i) {
          if (estimated[i] > estimated[amax_e]) {
            amax_e = i;
            tie_e = false;
          } else if (estimated[i] == estimated[amax_e]) {
            tie_e = true;
          }
          if (truth[i] > truth[amax_t]) {
            amax_t = i;
            tie_t = false;
          } else if (truth[i] == truth[amax_t]) {
            tie_t = true;
          }
        }
        out[o] = (!tie_e && !tie_t && amax_e == amax_t) ? 1.0 : 0.0;
        break;
      }
    }
  }
  return out;
}

std::vector<KParameter> default_k_grid() {
  std::vector<KParameter> grid = {KParameter::zero()};
  for (double k : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0}) grid.push_back(KParameter::finite(k));
  grid.push_back(KParameter::infinity());
  return grid;
}

TrialResults run_trials(const TrialConfig& cfg) {
  if (cfg.k_grid.empty()) throw std::invalid_argument("TrialConfig: k_grid must be nonempty");
  if (cfg.trials < 1) throw std::invalid_argument("TrialConfig: trials must be >= 1");
  if (cfg.objectives.empty()) throw std::invalid_argument("TrialConfig: objectives must be nonempty");
  if (cfg.true_score && cfg.true_score->size() != cfg.n)
    throw std::invalid_argument("TrialConfig: true_score dimension mismatch");

  AdditiveScore truth = cfg.true_score
                            ? *cfg.true_score
                            : random_truth(cfg.n, cfg.truth_scale,
                                           mix_seed(cfg.base_seed, kTruthStream));

  const std::size_t nk = cfg.k_grid.size();
  const std::size_t no = cfg.objectives.size();
  TrialResults res{cfg.k_grid, cfg.objectives, truth, {}, {}};
  res.values.assign(static_cast<std::size_t>(cfg.trials),
                    std::vector<std::vector<double>>(nk, std::vector<double>(no, 0.0)));
  res.excluded.assign(static_cast<std::size_t>(cfg.trials), std::vector<char>(nk, 0));

  for (int t = 0; t < cfg.trials; ++t) {
    AdditiveMatrix a =
        generate_observation(truth, cfg.noise, mix_seed(cfg.base_seed, static_cast<std::uint64_t>(t)));
    for (std::size_t ki = 0; ki < nk; ++ki) {
      const KParameter& k = cfg.k_grid[ki];
      try {
        AdditiveScore estimated = perron_family_score(a, k, cfg.solver);
        auto metrics = evaluate_objectives(estimated, truth, cfg.objectives);
        for (std::size_t oi = 0; oi < no; ++oi)
          res.values[static_cast<std::size_t>(t)][ki][oi] = metrics.at(cfg.objectives[oi]);
      } catch (const NonUniqueTropical&) {
        if (!k.is_infinite()) throw;
        res.excluded[static_cast<std::size_t>(t)][ki] = 1;
      } catch (const NoConvergence& e) {
        throw NoConvergence("k_sweep: trial " + std::to_string(t) + ", k = " + k.str() + ": " +
                                e.what(),
                            e.residual, e.iterations);
      }
    }
  }
  return res;
}

const SweepCell& SweepTable::cell(int ki, Objective obj) const {
  for (std::size_t oi = 0; oi < objectives.size(); ++oi)
    if (objectives[oi] == obj) return cells[static_cast<std::size_t>(ki)][oi];
  throw MissingObjective(std::string("SweepTable: no column for objective ") +
                         objective_name(obj));
}

bool bitwise_equal(const SweepTable& a, const SweepTable& b) {
  if (a.k_grid.size() != b.k_grid.size() || a.objectives != b.objectives) return false;
  for (std::size_t ki = 0; ki < a.k_grid.size(); ++ki) {
    if (!(a.k_grid[ki] == b.k_grid[ki])) return false;
    for (std::size_t oi = 0; oi < a.objectives.size(); ++oi) {
      const SweepCell& ca = a.cells[ki][oi];
      const SweepCell& cb = b.cells[ki][oi];
      if (ca.trials != cb.trials || ca.excluded != cb.excluded) return false;
      // bitwise: exact double equality, not approximate
      if (ca.mean != cb.mean || ca.std_error != cb.std_error) return false;
    }
  }
  return true;
}

SweepTable aggregate(const TrialResults& results) {
  const std::size_t nk = results.k_grid.size();
  const std::size_t no = results.objectives.size();
  SweepTable table{results.k_grid, results.objectives,
                   std::vector<std::vector<SweepCell>>(nk, std::vector<SweepCell>(no))};
  for (std::size_t ki = 0; ki < nk; ++ki) {
    for (std::size_t oi = 0; oi < no; ++oi) {
      Vec included;
      int excluded = 0;
      for (std::size_t t = 0; t < results.values.size(); ++t) {
        if (results.excluded[t][ki]) {
          ++excluded;
          continue;
        }
        included.push_back(results.values[t][ki][oi]);
      }
      SweepCell& cell = table.cells[ki][oi];
      cell.trials = static_cast<int>(included.size());
      cell.excluded = excluded;
      if (!included.empty()) {
        cell.mean = mean(included);
        if (included.size() > 1) {
          Vec sq(included.size());
          for (std::size_t i = 0; i < included.size(); ++i) {
            double d = included[i] - cell.mean;
            sq[i] = d * d;
          }
          double var = kahan_sum(sq) / static_cast<double>(included.size() - 1);
          cell.std_error = std::sqrt(var / static_cast<double>(included.size()));
        }
      }
    }
  }
  return table;
}

SweepTable k_sweep(const TrialConfig& cfg) { return aggregate(run_trials(cfg)); }

BestK best_k(const SweepTable& table, Objective objective) {
  std::size_t oi = table.objectives.size();
  for (std::size_t i = 0; i < table.objectives.size(); ++i)
    if (table.objectives[i] == objective) oi = i;
  if (oi == table.objectives.size())
    throw MissingObjective(std::string("best_k: table has no column for ") +
                           objective_name(objective));

  const bool minimize = lower_is_better(objective);
  std::size_t best = table.k_grid.size();
  for (std::size_t ki = 0; ki < table.k_grid.size(); ++ki) {
    if (table.cells[ki][oi].trials == 0) continue;  // fully excluded cell
    if (best == table.k_grid.size()) {
      best = ki;
      continue;
    }
    double cur = table.cells[ki][oi].mean;
    double ref = table.cells[best][oi].mean;
    bool better = minimize ? cur < ref : cur > ref;
    bool tied = cur == ref;
    if (better || (tied && table.k_grid[ki].order_key() < table.k_grid[best].order_key())) best = ki;
  }
  if (best == table.k_grid.size())
    throw MissingObjective("best_k: every cell for the objective is empty");

  BestK out{table.k_grid[best], {}};
  const SweepCell& bc = table.cells[best][oi];
  for (std::size_t ki = 0; ki < table.k_grid.size(); ++ki) {
    const SweepCell& cell = table.cells[ki][oi];
    if (cell.trials == 0) continue;
    double se = std::sqrt(cell.std_error * cell.std_error + bc.std_error * bc.std_error);
    if (std::abs(cell.mean - bc.mean) <= se) out.within_one_std_error.push_back(table.k_grid[ki]);
  }
  return out;
}

ScoreIndependenceReport score_independence_check(const TrialConfig& cfg,
                                                 const std::vector<AdditiveScore>& alt_scores) {
  if (alt_scores.size() < 2)
    throw std::invalid_argument("score_independence_check: need at least two scores");

  std::vector<TrialResults> runs;
  std::vector<SweepTable> tables;
  for (const AdditiveScore& s : alt_scores) {
    TrialConfig c = cfg;
    c.n = s.size();
    c.true_score = s;
    runs.push_back(run_trials(c));
    tables.push_back(aggregate(runs.back()));
  }

  ScoreIndependenceReport report{cfg.objectives, {}, {}, {}, 0.0, true};
  for (const AdditiveScore& s : alt_scores) report.truth_has_ties.push_back(has_ties(s));

  for (Objective o : cfg.objectives) {
    std::vector<KParameter> bests;
    for (const SweepTable& t : tables) bests.push_back(best_k(t, o).best);
    bool coincide = true;
    std::size_t ref = alt_scores.size();
    for (std::size_t si = 0; si < alt_scores.size(); ++si) {
      if (report.truth_has_ties[si]) continue;
      if (ref == alt_scores.size()) {
        ref = si;
        continue;
      }
      if (!(bests[si] == bests[ref])) coincide = false;
    }
    report.best_per_score.push_back(std::move(bests));
    report.best_coincides.push_back(coincide);
  }

  // Per-trial l2 losses must agree across truths under shared noise seeds:
  // the estimate minus its own truth depends only on the noise matrix.
  std::size_t l2_index = cfg.objectives.size();
  for (std::size_t oi = 0; oi < cfg.objectives.size(); ++oi)
    if (cfg.objectives[oi] == Objective::l2_additive) l2_index = oi;
  if (l2_index < cfg.objectives.size()) {
    for (std::size_t sa = 0; sa < alt_scores.size(); ++sa)
      for (std::size_t sb = sa + 1; sb < alt_scores.size(); ++sb) {
        if (report.truth_has_ties[sa] || report.truth_has_ties[sb]) continue;
        for (std::size_t t = 0; t < runs[sa].values.size(); ++t)
          for (std::size_t ki = 0; ki < cfg.k_grid.size(); ++ki) {
            if (runs[sa].excluded[t][ki] || runs[sb].excluded[t][ki]) continue;
            double d = std::abs(runs[sa].values[t][ki][l2_index] - runs[sb].values[t][ki][l2_index]);
            report.max_l2_trial_discrepancy = std::max(report.max_l2_trial_discrepancy, d);
          }
      }
  }
  report.l2_identical = report.max_l2_trial_discrepancy <= 1e-9;
  return report;
}

}  // namespace pairrank

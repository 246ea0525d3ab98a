#pragma once

// Score-recovery benchmarking: generate noisy comparison matrices from a true
// score, rank them with the whole family across a k grid (including 0 and
// inf), score the estimates against rank objectives, and locate the best k.
//
// Paired design: each trial draws one observation and evaluates it at every
// grid point, which removes the sampling noise from k-to-k comparisons. Seeds
// derive from base_seed + trial index through a splitmix mix, so results are
// independent of execution order and bit-for-bit reproducible.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pairrank/comparison.hpp"
#include "pairrank/perron.hpp"

namespace pairrank {

enum class Objective { kendall_tau, l2_additive, top_one };

const char* objective_name(Objective o);
Objective parse_objective(const std::string& name);

struct NoiseModel {
  enum class Kind { log_normal_skew, uniform_skew, log_normal_free };

  static NoiseModel log_normal_skew(double sigma);
  static NoiseModel uniform_skew(double delta);
  static NoiseModel log_normal_free(double sigma);

  Kind kind;
  double param;  // sigma for the normal models, half-width delta for uniform

  bool is_skew() const { return kind != Kind::log_normal_free; }

 private:
  NoiseModel(Kind k, double p) : kind(k), param(p) {}
};

// A = [s_i - s_j] + E with E drawn from the model. The skew models mirror an
// upper-triangle draw with exact negation, so the result is exactly skew;
// the free model draws every off-diagonal entry independently. Diagonals
// carry no noise.
AdditiveMatrix generate_observation(const AdditiveScore& s, const NoiseModel& noise,
                                    std::uint64_t seed);

// kendall_tau : discordant-pair fraction in [0,1], ties counted half
// l2_additive : ||estimated - truth||_2 (both sum-zero)
// top_one     : 1 if the unique argmaxes agree, 0 otherwise (ties give 0)
std::map<Objective, double> evaluate_objectives(const AdditiveScore& estimated,
                                                const AdditiveScore& truth,
                                                const std::vector<Objective>& objectives);

std::vector<KParameter> default_k_grid();

struct TrialConfig {
  int n = 5;
  std::optional<AdditiveScore> true_score;  // nullopt: random, drawn from base_seed
  double truth_scale = 1.0;                 // scale of the random truth
  NoiseModel noise = NoiseModel::log_normal_skew(0.5);
  std::vector<KParameter> k_grid = default_k_grid();
  int trials = 100;
  std::uint64_t base_seed = 0;
  std::vector<Objective> objectives = {Objective::kendall_tau, Objective::l2_additive,
                                       Objective::top_one};
  SolverConfig solver{};
};

// Per-trial detail: values[t][ki][oi]; excluded[t][ki] marks k = inf trials
// whose tropical eigenvector was not unique (their values are unset).
struct TrialResults {
  std::vector<KParameter> k_grid;
  std::vector<Objective> objectives;
  AdditiveScore truth;
  std::vector<std::vector<std::vector<double>>> values;
  std::vector<std::vector<char>> excluded;
};

TrialResults run_trials(const TrialConfig& cfg);

struct SweepCell {
  double mean = 0.0;
  double std_error = 0.0;  // standard error of the mean; 0 below 2 trials
  int trials = 0;          // included trials
  int excluded = 0;        // non-unique tropical outcomes (k = inf only)
};

struct SweepTable {
  std::vector<KParameter> k_grid;
  std::vector<Objective> objectives;
  std::vector<std::vector<SweepCell>> cells;  // [k][objective]

  const SweepCell& cell(int ki, Objective obj) const;
};

bool bitwise_equal(const SweepTable& a, const SweepTable& b);

SweepTable aggregate(const TrialResults& results);
SweepTable k_sweep(const TrialConfig& cfg);

struct BestK {
  KParameter best;
  // grid points whose mean is within one (combined) standard error of the
  // best mean; always contains best itself
  std::vector<KParameter> within_one_std_error;
};

// Best grid point for the objective: minimal mean for the loss objectives,
// maximal for top_one. Ties break toward the smallest k. Throws
// MissingObjective when the table has no such column.
BestK best_k(const SweepTable& table, Objective objective);

struct ScoreIndependenceReport {
  std::vector<Objective> objectives;
  std::vector<bool> truth_has_ties;                     // per score
  std::vector<std::vector<KParameter>> best_per_score;  // [objective][score]
  std::vector<bool> best_coincides;                     // per objective, over tie-free truths
  double max_l2_trial_discrepancy;  // max |loss_a - loss_b| over trials/k, tie-free truths
  bool l2_identical;                // max discrepancy <= 1e-9
};

// Runs the sweep once per candidate truth with identical noise seeds and
// reports whether the best k (and, for the l2 objective under shared noise,
// the per-trial losses themselves) agree across truths.
ScoreIndependenceReport score_independence_check(const TrialConfig& cfg,
                                                 const std::vector<AdditiveScore>& alt_scores);

}  // namespace pairrank

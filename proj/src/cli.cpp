#include "pairrank/cli.hpp"

#include <cstdlib>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pairrank/io.hpp"
#include "pairrank/rng.hpp"

namespace pairrank {

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path == "-" || out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot write " + out_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

bool has_extension(const std::string& path, const char* ext) {
  return std::filesystem::path(path).extension() == ext;
}

Vec parse_double_list(const std::string& text, const char* flag) {
  Vec out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    char* end = nullptr;
    double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || (end && *end != '\0'))
      throw CLI::ValidationError(flag, "cannot parse '" + field + "' as a number");
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError(flag, "expected a comma-separated list");
  return out;
}

std::vector<KParameter> parse_k_list(const std::string& text, const char* flag) {
  std::vector<KParameter> out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      out.push_back(KParameter::parse(field));
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError(flag, e.what());
    }
  }
  if (out.empty()) throw CLI::ValidationError(flag, "expected a comma-separated list");
  return out;
}

// Loads a matrix as additive log-comparisons. CSV files need --kind; JSON
// files carry their own kind, which --kind may restate but not contradict.
AdditiveMatrix load_additive(const std::string& input, const std::string& kind_flag) {
  std::string kind = kind_flag;
  Matrix m(0);
  if (has_extension(input, ".json")) {
    MatrixFile f = read_matrix_json(input);
    std::string file_kind = f.kind == "multiplicative" ? "mult" : "add";
    if (!kind.empty() && kind != file_kind)
      throw CLI::ValidationError("--kind", "conflicts with the kind stored in " + input);
    kind = file_kind;
    m = std::move(f.entries);
  } else {
    if (kind.empty())
      throw CLI::ValidationError("--kind", "required for CSV input (mult or add)");
    m = read_matrix_csv(input);
  }
  if (kind == "mult") return log_map(PositiveMatrix(std::move(m)));
  return AdditiveMatrix(std::move(m));
}

std::uint64_t env_default_seed() {
  if (const char* env = std::getenv("RANK_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::uint64_t>(v);
  }
  return 0;
}

nlohmann::json score_result_json(const AdditiveMatrix& a, const KParameter& k,
                                 const SolverConfig& cfg) {
  nlohmann::json j{{"k", k.str()}};
  switch (k.kind()) {
    case KParameter::Kind::zero: {
      j["score"] = to_json(hodge_score_additive(a));
      break;
    }
    case KParameter::Kind::finite: {
      LogPerronScore r = log_perron_score(a, k.value(), cfg);
      j["score"] = to_json(r.score);
      j["log_lambda"] = r.log_lambda;
      j["eigenvalue"] = std::exp(k.value() * r.log_lambda);  // lambda of the k-th Hadamard power
      j["iterations"] = r.iterations;
      j["residual"] = r.residual;
      break;
    }
    case KParameter::Kind::infinite: {
      TropicalEigenData data = tropical_eigen(a);
      if (!data.unique)
        throw NonUniqueTropical("rank: tropical eigenvector is not unique", std::move(data));
      j["score"] = to_json(*data.eigenvector);
      j["tropical_lambda"] = data.lambda;
      break;
    }
  }
  return j;
}

std::string score_result_csv(const nlohmann::json& result) {
  std::string line = result["k"].get<std::string>();
  for (const auto& v : result["score"]["entries"]) line += "," + format_double(v.get<double>());
  return line;
}

struct RankOpts {
  std::string input, kind, k = "1", format = "json", out = "-";
  bool all = false;
  SolverConfig solver;
};

void setup_rank(CLI::App& app) {
  auto opts = std::make_shared<RankOpts>();
  CLI::App* cmd = app.add_subcommand("rank", "Compute the ranking score of a comparison matrix");
  cmd->add_option("--input", opts->input, "matrix file (.csv or .json)")->required();
  cmd->add_option("--kind", opts->kind, "matrix kind: mult or add")
      ->check(CLI::IsMember({"mult", "add"}));
  cmd->add_option("--k", opts->k, "family parameter: 0, positive number, or inf");
  cmd->add_flag("--all", opts->all, "evaluate at 0, k and inf");
  cmd->add_option("--tol", opts->solver.tol, "solver tolerance");
  cmd->add_option("--max-iter", opts->solver.max_iter, "solver iteration cap");
  cmd->add_option("--output", opts->format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opts->out, "output path ('-' for stdout)");
  cmd->callback([opts] {
    AdditiveMatrix a = load_additive(opts->input, opts->kind);
    KParameter k = KParameter::parse(opts->k);
    std::vector<KParameter> ks;
    if (opts->all) {
      ks.push_back(KParameter::zero());
      if (k.is_finite()) ks.push_back(k);
      ks.push_back(KParameter::infinity());
    } else {
      ks.push_back(k);
    }
    nlohmann::json results = nlohmann::json::array();
    for (const KParameter& kp : ks) results.push_back(score_result_json(a, kp, opts->solver));
    if (opts->format == "csv") {
      std::string text;
      for (const auto& r : results) text += score_result_csv(r) + "\n";
      emit(text, opts->out);
    } else {
      emit((opts->all ? results : results[0]).dump(2), opts->out);
    }
  });
}

struct ConvergeOpts {
  std::string input, kind, ladder = "10,1,0.1,0.01", format = "csv", out = "-";
  SolverConfig solver;
};

void setup_converge(CLI::App& app) {
  auto opts = std::make_shared<ConvergeOpts>();
  CLI::App* cmd = app.add_subcommand(
      "converge", "Tabulate the family's distance to its k -> 0 and k -> inf limits");
  cmd->add_option("--input", opts->input, "matrix file (.csv or .json)")->required();
  cmd->add_option("--kind", opts->kind, "matrix kind: mult or add")
      ->check(CLI::IsMember({"mult", "add"}));
  cmd->add_option("--k-ladder", opts->ladder, "comma-separated positive k values");
  cmd->add_option("--tol", opts->solver.tol, "solver tolerance");
  cmd->add_option("--max-iter", opts->solver.max_iter, "solver iteration cap");
  cmd->add_option("--output", opts->format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opts->out, "output path ('-' for stdout)");
  cmd->callback([opts] {
    AdditiveMatrix a = load_additive(opts->input, opts->kind);
    Vec ladder = parse_double_list(opts->ladder, "--k-ladder");
    for (double k : ladder)
      if (!(k > 0.0)) throw CLI::ValidationError("--k-ladder", "entries must be positive");

    AdditiveScore hodge = hodge_score_additive(a);
    TropicalEigenData trop = tropical_eigen(a);

    nlohmann::json rows = nlohmann::json::array();
    for (double k : ladder) {
      AdditiveScore score = log_perron_score(a, k, opts->solver).score;
      nlohmann::json row{{"k", k},
                         {"err_hodge", inf_distance(score.entries(), hodge.entries())}};
      if (trop.unique)
        row["err_tropical"] = inf_distance(score.entries(), trop.eigenvector->entries());
      else
        row["err_tropical"] = nullptr;
      rows.push_back(std::move(row));
    }
    if (opts->format == "csv") {
      std::string text = "k,err_hodge,err_tropical\n";
      for (const auto& row : rows) {
        text += format_double(row["k"].get<double>()) + "," +
                format_double(row["err_hodge"].get<double>()) + ",";
        text += row["err_tropical"].is_null() ? "nan"
                                              : format_double(row["err_tropical"].get<double>());
        text += '\n';
      }
      emit(text, opts->out);
    } else {
      emit(nlohmann::json{{"rows", rows}}.dump(2), opts->out);
    }
  });
}

struct PerturbOpts {
  int n = 5, trials = 100;
  double sigma = 0.05, kappa = 1.0;
  std::uint64_t seed = 0;
  std::string out = "-";
  SolverConfig solver;
};

void setup_perturb_check(CLI::App& app) {
  auto opts = std::make_shared<PerturbOpts>();
  opts->seed = env_default_seed();
  CLI::App* cmd = app.add_subcommand(
      "perturb-check", "Monte-Carlo check of the eigenvector perturbation bound");
  cmd->add_option("--n", opts->n, "matrix dimension")->check(CLI::Range(2, 1000));
  cmd->add_option("--sigma", opts->sigma, "skew noise scale")->check(CLI::PositiveNumber);
  cmd->add_option("--kappa", opts->kappa, "centering constant (>= 1)");
  cmd->add_option("--trials", opts->trials, "number of seeded instances")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts->seed, "base seed (default RANK_SEED or 0)");
  cmd->add_option("--tol", opts->solver.tol, "solver tolerance");
  cmd->add_option("--max-iter", opts->solver.max_iter, "solver iteration cap");
  cmd->add_option("--out", opts->out, "output path ('-' for stdout)");
  cmd->callback([opts] {
    int applicable = 0, passed = 0, not_applicable = 0;
    std::vector<int> failures;
    double tightest_margin = std::numeric_limits<double>::infinity();
    int tightest_trial = -1;
    nlohmann::json tightest_report;
    for (int t = 0; t < opts->trials; ++t) {
      Rng truth_rng(mix_seed(opts->seed, 2 * static_cast<std::uint64_t>(t)));
      Vec raw(static_cast<std::size_t>(opts->n));
      for (double& v : raw) v = truth_rng.normal();
      AdditiveScore truth = AdditiveScore::centered(std::move(raw));
      AdditiveMatrix a =
          generate_observation(truth, NoiseModel::log_normal_skew(opts->sigma),
                               mix_seed(opts->seed, 2 * static_cast<std::uint64_t>(t) + 1));
      PositiveMatrix x = exp_scale_map(a, 1.0);
      try {
        ProjectiveScore s = exp_score(truth);
        BoundCheck check = verify_epsilon_bound(x, s, opts->kappa, opts->solver);
        ++applicable;
        if (check.passed)
          ++passed;
        else
          failures.push_back(t);
        if (check.margin < tightest_margin) {
          tightest_margin = check.margin;
          tightest_trial = t;
          tightest_report = to_json(build_report(x, s, opts->kappa));
          tightest_report["observed_epsilon_norm"] = check.observed_epsilon_norm;
          tightest_report["fit_scale"] = check.fit_scale;
        }
      } catch (const NotApplicable&) {
        ++not_applicable;
      }
    }
    nlohmann::json j{{"trials", opts->trials},
                     {"applicable", applicable},
                     {"passed", passed},
                     {"failed", static_cast<int>(failures.size())},
                     {"not_applicable", not_applicable},
                     {"applicability_rate", static_cast<double>(applicable) / opts->trials},
                     {"failures", failures}};
    if (tightest_trial >= 0) {
      j["tightest_margin_trial"] = tightest_trial;
      j["tightest_margin_report"] = std::move(tightest_report);
    }
    emit(j.dump(2), opts->out);
  });
}

struct FiberOpts {
  std::string input, kind, k = "1", out = "-";
  SolverConfig solver;
};

void setup_fiber(CLI::App& app) {
  auto opts = std::make_shared<FiberOpts>();
  CLI::App* cmd =
      app.add_subcommand("fiber", "Decompose a matrix into score + zero-fiber certificate");
  cmd->add_option("--input", opts->input, "matrix file (.csv or .json)")->required();
  cmd->add_option("--kind", opts->kind, "matrix kind: mult or add")
      ->check(CLI::IsMember({"mult", "add"}));
  cmd->add_option("--k", opts->k, "family parameter: 0, positive number, or inf");
  cmd->add_option("--tol", opts->solver.tol, "solver tolerance");
  cmd->add_option("--max-iter", opts->solver.max_iter, "solver iteration cap");
  cmd->add_option("--out", opts->out, "output path ('-' for stdout)");
  cmd->callback([opts] {
    AdditiveMatrix a = load_additive(opts->input, opts->kind);
    FiberCertificate cert = fiber_decompose(a, KParameter::parse(opts->k), opts->solver);
    emit(to_json(cert).dump(2), opts->out);
  });
}

struct SampleKalmanOpts {
  std::string w, out = "-";
  double lambda = 0.0;
  std::uint64_t seed = 0;
};

void setup_sample_kalman(CLI::App& app) {
  auto opts = std::make_shared<SampleKalmanOpts>();
  opts->seed = env_default_seed();
  CLI::App* cmd = app.add_subcommand(
      "sample-kalman", "Sample a positive matrix with prescribed Perron eigenpair");
  cmd->add_option("--w", opts->w, "target eigenvector, comma-separated positives")->required();
  cmd->add_option("--lambda", opts->lambda, "target eigenvalue")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts->seed, "seed (default RANK_SEED or 0)");
  cmd->add_option("--out", opts->out, "output path ('-' for stdout; .json selects JSON)");
  cmd->callback([opts] {
    ProjectiveScore w = normalize_projective(parse_double_list(opts->w, "--w"));
    PositiveMatrix x = kalman_sample(w, opts->lambda, opts->seed);
    if (has_extension(opts->out, ".json"))
      write_matrix_json(opts->out, x.entries(), "multiplicative");
    else
      emit(matrix_to_csv(x.entries()), opts->out);
  });
}

struct SampleFiberOpts {
  int n = 5;
  std::string k = "1", out = "-";
  double c = 0.0;
  std::uint64_t seed = 0;
  bool multi_zero = false;
};

void setup_sample_fiber(CLI::App& app) {
  auto opts = std::make_shared<SampleFiberOpts>();
  opts->seed = env_default_seed();
  CLI::App* cmd =
      app.add_subcommand("sample-fiber", "Sample an additive matrix from the zero fiber");
  cmd->add_option("--n", opts->n, "matrix dimension")->check(CLI::Range(2, 1000));
  cmd->add_option("--k", opts->k, "family parameter: 0, positive number, or inf");
  cmd->add_option("--c", opts->c, "coefficient of the all-ones matrix");
  cmd->add_option("--seed", opts->seed, "seed (default RANK_SEED or 0)");
  cmd->add_flag("--multi-zero", opts->multi_zero, "k=inf only: force a second zero per row");
  cmd->add_option("--out", opts->out, "output path ('-' for stdout; .json selects JSON)");
  cmd->callback([opts] {
    AdditiveMatrix a =
        sample_zero_fiber(opts->n, KParameter::parse(opts->k), opts->seed, opts->c, opts->multi_zero);
    if (has_extension(opts->out, ".json"))
      write_matrix_json(opts->out, a.entries(), "additive");
    else
      emit(matrix_to_csv(a.entries()), opts->out);
  });
}

struct SweepOpts {
  std::string config, truth = "random", noise = "lognormal-skew", k_grid, objectives, out = "-";
  std::string format = "json";
  int n = 5, trials = 100;
  double sigma = 0.5, delta = 0.5, truth_scale = 1.0;
  std::uint64_t seed = 0;
  SolverConfig solver;
  // which flags were passed explicitly (override the config file)
  CLI::App* cmd = nullptr;
};

NoiseModel make_noise(const std::string& name, double sigma, double delta) {
  if (name == "lognormal-skew") return NoiseModel::log_normal_skew(sigma);
  if (name == "uniform-skew") return NoiseModel::uniform_skew(delta);
  if (name == "lognormal-free") return NoiseModel::log_normal_free(sigma);
  throw CLI::ValidationError("--noise",
                             "expected lognormal-skew, uniform-skew or lognormal-free");
}

TrialConfig config_from_json(const nlohmann::json& j) {
  TrialConfig cfg;
  cfg.n = j.value("n", cfg.n);
  if (j.contains("truth") && j["truth"].is_array())
    cfg.true_score = AdditiveScore::centered(j["truth"].get<Vec>());
  cfg.truth_scale = j.value("truth_scale", cfg.truth_scale);
  if (j.contains("noise")) {
    const auto& nj = j["noise"];
    cfg.noise = make_noise(nj.value("model", "lognormal-skew"), nj.value("sigma", 0.5),
                           nj.value("delta", 0.5));
  }
  if (j.contains("k_grid")) {
    cfg.k_grid.clear();
    for (const auto& e : j["k_grid"]) {
      if (e.is_string())
        cfg.k_grid.push_back(KParameter::parse(e.get<std::string>()));
      else if (e.get<double>() == 0.0)
        cfg.k_grid.push_back(KParameter::zero());
      else
        cfg.k_grid.push_back(KParameter::finite(e.get<double>()));
    }
  }
  cfg.trials = j.value("trials", cfg.trials);
  cfg.base_seed = j.value("base_seed", cfg.base_seed);
  if (j.contains("objectives")) {
    cfg.objectives.clear();
    for (const auto& e : j["objectives"]) cfg.objectives.push_back(parse_objective(e.get<std::string>()));
  }
  cfg.solver.tol = j.value("tol", cfg.solver.tol);
  cfg.solver.max_iter = j.value("max_iter", cfg.solver.max_iter);
  return cfg;
}

TrialConfig build_trial_config(const SweepOpts& opts) {
  TrialConfig cfg;
  if (!opts.config.empty()) {
    std::ifstream in(opts.config);
    if (!in) throw IoError("cannot open " + opts.config);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw IoError(opts.config + ": " + e.what());
    }
    cfg = config_from_json(j);
  }
  auto passed = [&](const std::string& flag) { return opts.cmd->count(flag) > 0; };
  if (passed("--n")) cfg.n = opts.n;
  if (passed("--truth")) {
    if (opts.truth == "random")
      cfg.true_score.reset();
    else
      cfg.true_score = AdditiveScore::centered(parse_double_list(opts.truth, "--truth"));
  }
  if (passed("--truth-scale")) cfg.truth_scale = opts.truth_scale;
  if (passed("--noise") || passed("--sigma") || passed("--delta")) {
    std::string name = passed("--noise") ? opts.noise : "lognormal-skew";
    cfg.noise = make_noise(name, opts.sigma, opts.delta);
  }
  if (passed("--k-grid")) cfg.k_grid = parse_k_list(opts.k_grid, "--k-grid");
  if (passed("--trials")) cfg.trials = opts.trials;
  if (passed("--seed")) cfg.base_seed = opts.seed;
  if (passed("--objectives")) {
    cfg.objectives.clear();
    std::stringstream ss(opts.objectives);
    std::string field;
    while (std::getline(ss, field, ',')) cfg.objectives.push_back(parse_objective(field));
  }
  if (passed("--tol")) cfg.solver.tol = opts.solver.tol;
  if (passed("--max-iter")) cfg.solver.max_iter = opts.solver.max_iter;
  if (cfg.true_score && cfg.true_score->size() != cfg.n) cfg.n = cfg.true_score->size();
  return cfg;
}

std::shared_ptr<SweepOpts> add_sweep_options(CLI::App* cmd) {
  auto opts = std::make_shared<SweepOpts>();
  opts->seed = env_default_seed();
  opts->cmd = cmd;
  cmd->add_option("--config", opts->config, "JSON config file (flags override its fields)");
  cmd->add_option("--n", opts->n, "matrix dimension")->check(CLI::Range(2, 1000));
  cmd->add_option("--truth", opts->truth, "'random' or comma-separated true score");
  cmd->add_option("--truth-scale", opts->truth_scale, "scale of the random truth");
  cmd->add_option("--noise", opts->noise, "lognormal-skew | uniform-skew | lognormal-free");
  cmd->add_option("--sigma", opts->sigma, "noise scale for the normal models");
  cmd->add_option("--delta", opts->delta, "half-width for uniform-skew");
  cmd->add_option("--k-grid", opts->k_grid, "comma-separated k values (0, numbers, inf)");
  cmd->add_option("--trials", opts->trials, "number of trials")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts->seed, "base seed (default RANK_SEED or 0)");
  cmd->add_option("--objectives", opts->objectives, "comma list: kendall_tau,l2_additive,top_one");
  cmd->add_option("--tol", opts->solver.tol, "solver tolerance");
  cmd->add_option("--max-iter", opts->solver.max_iter, "solver iteration cap");
  cmd->add_option("--out", opts->out, "output path ('-' for stdout)");
  return opts;
}

void setup_sweep(CLI::App& app) {
  CLI::App* cmd = app.add_subcommand("sweep", "Monte-Carlo score-recovery sweep over a k grid");
  auto opts = add_sweep_options(cmd);
  cmd->add_option("--output", opts->format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->callback([opts] {
    SweepTable table = k_sweep(build_trial_config(*opts));
    if (opts->format == "csv")
      emit(sweep_table_csv(table), opts->out);
    else
      emit(to_json(table).dump(2), opts->out);
  });
}

void setup_recover(CLI::App& app) {
  CLI::App* cmd =
      app.add_subcommand("recover", "Run the sweep and report the best k per objective");
  auto opts = add_sweep_options(cmd);
  cmd->callback([opts] {
    TrialConfig cfg = build_trial_config(*opts);
    SweepTable table = k_sweep(cfg);
    nlohmann::json best = nlohmann::json::object();
    for (Objective o : cfg.objectives) {
      BestK b = best_k(table, o);
      nlohmann::json within = nlohmann::json::array();
      for (const KParameter& k : b.within_one_std_error) within.push_back(k.str());
      best[objective_name(o)] = nlohmann::json{{"k", b.best.str()}, {"within_one_stderr", within}};
    }
    emit(nlohmann::json{{"table", to_json(table)}, {"best", best}}.dump(2), opts->out);
  });
}

int domain_error(const char* type, const std::string& message, nlohmann::json extra = {}) {
  nlohmann::json j{{"error", type}, {"message", message}};
  for (auto& [key, value] : extra.items()) j[key] = value;
  std::cerr << j.dump() << std::endl;
  return 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"pairrank: pairwise-comparison ranking toolkit"};
  app.require_subcommand(1);
  setup_rank(app);
  setup_converge(app);
  setup_perturb_check(app);
  setup_fiber(app);
  setup_sample_kalman(app);
  setup_sample_fiber(app);
  setup_sweep(app);
  setup_recover(app);

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const NonUniqueTropical& e) {
    return domain_error("NonUniqueTropical", e.what(), to_json(e.data));
  } catch (const NotInFiber& e) {
    return domain_error("NotInFiber", e.what(), {{"row_sums", e.row_sums}});
  } catch (const NotInZeroFiber& e) {
    return domain_error("NotInZeroFiber", e.what(),
                        {{"row_statistics", e.row_statistics}, {"spread", e.spread}});
  } catch (const NoConvergence& e) {
    return domain_error("NoConvergence", e.what(),
                        {{"residual", e.residual}, {"iterations", e.iterations}});
  } catch (const NotApplicable& e) {
    return domain_error("NotApplicable", e.what());
  } catch (const OverflowRisk& e) {
    return domain_error("OverflowRisk", e.what());
  } catch (const NonPositiveEntry& e) {
    return domain_error("NonPositiveEntry", e.what());
  } catch (const PositiveCycle& e) {
    return domain_error("PositiveCycle", e.what());
  } catch (const MissingObjective& e) {
    return domain_error("MissingObjective", e.what());
  } catch (const InternalInconsistency& e) {
    return domain_error("InternalInconsistency", e.what());
  } catch (const IoError& e) {
    return domain_error("IoError", e.what());
  } catch (const Error& e) {
    return domain_error("Error", e.what());
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    return domain_error("Unexpected", e.what());
  }
}

}  // namespace pairrank

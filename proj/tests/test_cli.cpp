#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "pairrank/cli.hpp"
#include "pairrank/io.hpp"

using namespace pairrank;

namespace {

int run(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"pairrank"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(storage.size());
  for (const std::string& s : storage) argv.push_back(s.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

// capture stderr while running; stdout goes to files via --out
struct CaptureStderr {
  CaptureStderr() : old(std::cerr.rdbuf(buffer.rdbuf())) {}
  ~CaptureStderr() { std::cerr.rdbuf(old); }
  std::stringstream buffer;
  std::streambuf* old;
};

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "pairrank_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("rank on the all-ones matrix returns the zero score") {
  auto dir = temp_dir();
  auto input = dir / "ones3.csv";
  write_matrix_csv(input, Matrix(3, 1.0));
  auto out = dir / "rank.json";
  int code = run({"rank", "--input", input.string(), "--kind", "mult", "--k", "1", "--out",
                  out.string()});
  CHECK(code == 0);
  nlohmann::json j = read_json(out);
  CHECK(j["k"] == "1");
  for (double v : j["score"]["entries"].get<Vec>()) CHECK(v == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(j["eigenvalue"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("kalman sample and rank roundtrip through files") {
  auto dir = temp_dir();
  auto matrix_path = dir / "kalman.csv";
  int code = run({"sample-kalman", "--w", "2,1,0.5", "--lambda", "5", "--seed", "7", "--out",
                  matrix_path.string()});
  REQUIRE(code == 0);

  auto out = dir / "kalman_rank.json";
  code = run({"rank", "--input", matrix_path.string(), "--kind", "mult", "--k", "1", "--out",
              out.string()});
  REQUIRE(code == 0);
  nlohmann::json j = read_json(out);
  CHECK(j["eigenvalue"].get<double>() == doctest::Approx(5.0).epsilon(1e-9));

  // score = centered log of the requested eigenvector
  Vec expected = {std::log(2.0), std::log(1.0), std::log(0.5)};
  expected = centered(expected);
  Vec score = j["score"]["entries"].get<Vec>();
  for (int i = 0; i < 3; ++i)
    CHECK(score[static_cast<std::size_t>(i)] ==
          doctest::Approx(expected[static_cast<std::size_t>(i)]).epsilon(1e-9));
}

TEST_CASE("rank --all emits the three-member family") {
  auto dir = temp_dir();
  auto input = dir / "skew4.csv";
  {
    AdditiveMatrix a = generate_observation(AdditiveScore::centered({1.0, 0.3, -0.4, -0.9}),
                                            NoiseModel::log_normal_skew(0.2), 321);
    write_matrix_csv(input, a.entries());
  }
  auto out = dir / "all.json";
  int code = run({"rank", "--input", input.string(), "--kind", "add", "--k", "2", "--all", "--out",
                  out.string()});
  REQUIRE(code == 0);
  nlohmann::json j = read_json(out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0]["k"] == "0");
  CHECK(j[1]["k"] == "2");
  CHECK(j[2]["k"] == "inf");
  CHECK(j[2].contains("tropical_lambda"));
}

TEST_CASE("converge emits a decreasing error ladder toward the row-mean limit") {
  auto dir = temp_dir();
  auto input = dir / "random5.csv";
  {
    AdditiveMatrix a = generate_observation(AdditiveScore::zeros(5),
                                            NoiseModel::log_normal_skew(1.0), 20240101);
    write_matrix_csv(input, a.entries());
  }
  auto out = dir / "converge.csv";
  int code = run({"converge", "--input", input.string(), "--kind", "add", "--k-ladder",
                  "1e-1,1e-2,1e-3", "--out", out.string()});
  REQUIRE(code == 0);

  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "k,err_hodge,err_tropical");
  double prev = std::numeric_limits<double>::infinity();
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rows;
    std::stringstream ss(line);
    std::string k_field, err_field;
    std::getline(ss, k_field, ',');
    std::getline(ss, err_field, ',');
    double err = std::stod(err_field);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(rows == 3);
  CHECK(prev <= 1e-2);
}

TEST_CASE("fiber certificates survive the file roundtrip") {
  auto dir = temp_dir();
  auto input = dir / "fiber_input.csv";
  int code = run({"sample-fiber", "--n", "4", "--k", "1.5", "--c", "0.25", "--seed", "5", "--out",
                  input.string()});
  REQUIRE(code == 0);
  auto out = dir / "fiber_cert.json";
  code = run({"fiber", "--input", input.string(), "--kind", "add", "--k", "1.5", "--out",
              out.string()});
  REQUIRE(code == 0);
  nlohmann::json j = read_json(out);
  CHECK(j["c"].get<double>() == doctest::Approx(0.25).epsilon(1e-8));
  for (double v : j["score"]["entries"].get<Vec>()) CHECK(v == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("perturb-check reports a clean pass") {
  auto dir = temp_dir();
  auto out = dir / "perturb.json";
  int code = run({"perturb-check", "--n", "5", "--sigma", "0.05", "--trials", "20", "--seed", "11",
                  "--out", out.string()});
  REQUIRE(code == 0);
  nlohmann::json j = read_json(out);
  CHECK(j["trials"] == 20);
  CHECK(j["failed"] == 0);
  CHECK(j["passed"] == j["applicable"]);
  // the tightest instance's full report rides along
  CHECK(j["tightest_margin_report"].contains("rho"));
  CHECK(j["tightest_margin_report"].contains("epsilon_bound"));
  CHECK(j["tightest_margin_report"].contains("linear_estimate"));
}

TEST_CASE("sweep runs are deterministic at the file level") {
  auto dir = temp_dir();
  auto out1 = dir / "sweep1.csv";
  auto out2 = dir / "sweep2.csv";
  for (const auto& out : {out1, out2}) {
    int code = run({"sweep", "--n", "4", "--noise", "lognormal-skew", "--sigma", "0.5", "--k-grid",
                    "0,1,inf", "--trials", "25", "--seed", "99", "--output", "csv", "--out",
                    out.string()});
    REQUIRE(code == 0);
  }
  std::ifstream a(out1), b(out2);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(sa.str().rfind("k,objective,mean,stderr,trials,excluded\n", 0) == 0);
}

TEST_CASE("recover reports a best k per objective") {
  auto dir = temp_dir();
  auto config = dir / "recover.json";
  {
    std::ofstream out(config);
    out << R"({"n": 4, "noise": {"model": "lognormal-skew", "sigma": 0.4},
               "k_grid": ["0", 1, "inf"], "trials": 20, "base_seed": 17,
               "objectives": ["l2_additive", "kendall_tau"]})";
  }
  auto out = dir / "recover_out.json";
  int code = run({"recover", "--config", config.string(), "--out", out.string()});
  REQUIRE(code == 0);
  nlohmann::json j = read_json(out);
  CHECK(j["best"].contains("l2_additive"));
  CHECK(j["best"].contains("kendall_tau"));
  CHECK(j["table"]["cells"].size() == 6);
}

TEST_CASE("usage errors exit with 2") {
  CaptureStderr capture;
  CHECK(run({"rank", "--no-such-flag"}) == 2);
  CHECK(run({"definitely-not-a-subcommand"}) == 2);
  // CSV input without --kind is a usage error too
  auto dir = temp_dir();
  auto input = dir / "nokind.csv";
  write_matrix_csv(input, Matrix(2, 1.0));
  CHECK(run({"rank", "--input", input.string(), "--k", "1"}) == 2);
}

TEST_CASE("domain errors exit with 1 and emit json diagnostics") {
  auto dir = temp_dir();
  auto input = dir / "nonunique.csv";
  {
    // two zero-weight self-loops, everything else far below: two critical classes
    Matrix m(3, std::exp(-9.0));
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    write_matrix_csv(input, m);
  }
  CaptureStderr capture;
  int code = run({"rank", "--input", input.string(), "--kind", "mult", "--k", "inf"});
  CHECK(code == 1);
  nlohmann::json diag = nlohmann::json::parse(capture.buffer.str());
  CHECK(diag["error"] == "NonUniqueTropical");
  CHECK(diag["unique"] == false);
  CHECK(diag["basis"].size() == 2);
}

TEST_CASE("missing input files exit with 1") {
  CaptureStderr capture;
  CHECK(run({"rank", "--input", "/nonexistent/m.csv", "--kind", "mult", "--k", "1"}) == 1);
  nlohmann::json diag = nlohmann::json::parse(capture.buffer.str());
  CHECK(diag["error"] == "IoError");
}

TEST_CASE("json inputs carry their kind and conflicts are usage errors") {
  auto dir = temp_dir();
  auto input = dir / "add2.json";
  {
    Matrix m(2);
    m(0, 1) = 0.4;
    m(1, 0) = -0.4;
    write_matrix_json(input, m, "additive");
  }
  auto out = dir / "add2_rank.json";
  // no --kind needed: the file says additive
  CHECK(run({"rank", "--input", input.string(), "--k", "0", "--out", out.string()}) == 0);
  nlohmann::json j = read_json(out);
  CHECK(j["score"]["entries"][0].get<double>() == doctest::Approx(0.2));

  CaptureStderr capture;
  CHECK(run({"rank", "--input", input.string(), "--kind", "mult", "--k", "0"}) == 2);
}

TEST_CASE("csv output format emits one row per k") {
  auto dir = temp_dir();
  auto input = dir / "ones2.csv";
  write_matrix_csv(input, Matrix(2, 1.0));
  auto out = dir / "rank.csv";
  int code = run({"rank", "--input", input.string(), "--kind", "mult", "--k", "3", "--all",
                  "--output", "csv", "--out", out.string()});
  REQUIRE(code == 0);
  std::ifstream in(out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("RANK_SEED supplies the default seed") {
  auto dir = temp_dir();
  auto out_env = dir / "env_seed.csv";
  auto out_flag = dir / "flag_seed.csv";
  setenv("RANK_SEED", "4242", 1);
  REQUIRE(run({"sample-fiber", "--n", "3", "--k", "1", "--out", out_env.string()}) == 0);
  unsetenv("RANK_SEED");
  REQUIRE(run({"sample-fiber", "--n", "3", "--k", "1", "--seed", "4242", "--out",
               out_flag.string()}) == 0);
  CHECK(read_matrix_csv(out_env) == read_matrix_csv(out_flag));
}

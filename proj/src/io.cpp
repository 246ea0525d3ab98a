#include "pairrank/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace pairrank {

namespace {

double parse_field(const std::string& field, const std::filesystem::path& path) {
  char* end = nullptr;
  double v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || (end && *end != '\0'))
    throw IoError(path.string() + ": cannot parse numeric field '" + field + "'");
  return v;
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

nlohmann::json entries_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    entries.push_back(std::move(row));
  }
  return entries;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Matrix read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trimmed(line).empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) row.push_back(parse_field(trimmed(field), path));
    rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n < 2) throw IoError(path.string() + ": matrix must have at least 2 rows");
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    if (rows[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(n))
      throw IoError(path.string() + ": row " + std::to_string(i) + " has " +
                    std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                    " fields, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

std::string matrix_to_csv(const Matrix& m) {
  std::string out;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (j) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

void write_matrix_csv(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << matrix_to_csv(m);
}

nlohmann::json matrix_to_json(const Matrix& m, const std::string& kind) {
  return nlohmann::json{{"n", m.size()}, {"entries", entries_json(m)}, {"kind", kind}};
}

MatrixFile read_matrix_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path.string() + ": " + e.what());
  }
  if (!j.contains("n") || !j.contains("entries") || !j.contains("kind"))
    throw IoError(path.string() + ": matrix JSON needs fields n, entries, kind");
  const int n = j["n"].get<int>();
  const std::string kind = j["kind"].get<std::string>();
  if (kind != "multiplicative" && kind != "additive")
    throw IoError(path.string() + ": kind must be 'multiplicative' or 'additive'");
  const auto& entries = j["entries"];
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n))
    throw IoError(path.string() + ": entries must be an n x n array");
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw IoError(path.string() + ": entries must be an n x n array");
    for (int jx = 0; jx < n; ++jx) m(i, jx) = row[static_cast<std::size_t>(jx)].get<double>();
  }
  return MatrixFile{std::move(m), kind};
}

void write_matrix_json(const std::filesystem::path& path, const Matrix& m,
                       const std::string& kind) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << matrix_to_json(m, kind).dump(2) << '\n';
}

nlohmann::json to_json(const AdditiveScore& s) {
  return nlohmann::json{{"n", s.size()}, {"entries", s.entries()}, {"normalization", "sum0"}};
}

nlohmann::json to_json(const ProjectiveScore& s) {
  return nlohmann::json{{"n", s.size()}, {"entries", s.entries()}, {"normalization", "gm1"}};
}

AdditiveScore additive_score_from_json(const nlohmann::json& j) {
  if (j.value("normalization", "") != "sum0")
    throw IoError("score JSON: expected normalization 'sum0'");
  return AdditiveScore(j.at("entries").get<Vec>());
}

ProjectiveScore projective_score_from_json(const nlohmann::json& j) {
  if (j.value("normalization", "") != "gm1")
    throw IoError("score JSON: expected normalization 'gm1'");
  return ProjectiveScore(j.at("entries").get<Vec>());
}

nlohmann::json to_json(const TropicalEigenData& data) {
  nlohmann::json j{{"lambda", data.lambda},
                   {"critical_nodes", data.critical_nodes},
                   {"basis", data.basis},
                   {"unique", data.unique}};
  if (data.eigenvector) j["eigenvector"] = to_json(*data.eigenvector);
  return j;
}

nlohmann::json to_json(const PerturbationReport& report) {
  return nlohmann::json{{"kappa", report.kappa},
                        {"xi", entries_json(report.xi.entries())},
                        {"centered_xi", entries_json(report.centered_xi)},
                        {"norm_xi", report.norm_xi},
                        {"rho", report.rho},
                        {"r", report.r},
                        {"r_bar", report.r_bar},
                        {"linear_estimate", report.linear_estimate},
                        {"epsilon_bound", report.epsilon_bound},
                        {"applicable", report.applicable}};
}

nlohmann::json to_json(const FiberCertificate& cert) {
  return nlohmann::json{{"k", cert.k.str()},
                        {"score", to_json(cert.score)},
                        {"c", cert.c},
                        {"row_components", cert.row_components},
                        {"max_defect", cert.max_defect}};
}

nlohmann::json to_json(const SweepTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t ki = 0; ki < table.k_grid.size(); ++ki)
    for (std::size_t oi = 0; oi < table.objectives.size(); ++oi) {
      const SweepCell& cell = table.cells[ki][oi];
      rows.push_back(nlohmann::json{{"k", table.k_grid[ki].str()},
                                    {"objective", objective_name(table.objectives[oi])},
                                    {"mean", cell.mean},
                                    {"stderr", cell.std_error},
                                    {"trials", cell.trials},
                                    {"excluded", cell.excluded}});
    }
  return nlohmann::json{{"cells", std::move(rows)}};
}

std::string sweep_table_csv(const SweepTable& table) {
  std::string out = "k,objective,mean,stderr,trials,excluded\n";
  for (std::size_t ki = 0; ki < table.k_grid.size(); ++ki)
    for (std::size_t oi = 0; oi < table.objectives.size(); ++oi) {
      const SweepCell& cell = table.cells[ki][oi];
      out += table.k_grid[ki].str();
      out += ',';
      out += objective_name(table.objectives[oi]);
      out += ',';
      out += format_double(cell.mean);
      out += ',';
      out += format_double(cell.std_error);
      out += ',';
      out += std::to_string(cell.trials);
      out += ',';
      out += std::to_string(cell.excluded);
      out += '\n';
    }
  return out;
}

}  // namespace pairrank

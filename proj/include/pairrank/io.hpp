#pragma once

// File formats and JSON views.
//
// Matrices: plain CSV (n rows of n decimal fields, no header) or JSON
// {"n": int, "entries": [[...]], "kind": "multiplicative"|"additive"}.
// Scores: JSON arrays with a "normalization" field ("gm1" | "sum0").
// Doubles are written with 17 significant digits, so write-then-read is
// bit-exact.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pairrank/comparison.hpp"
#include "pairrank/fiber.hpp"
#include "pairrank/perturbation.hpp"
#include "pairrank/recovery.hpp"
#include "pairrank/tropical.hpp"

namespace pairrank {

// %.17g — round-trips every double exactly through decimal.
std::string format_double(double v);

Matrix read_matrix_csv(const std::filesystem::path& path);
void write_matrix_csv(const std::filesystem::path& path, const Matrix& m);
std::string matrix_to_csv(const Matrix& m);

struct MatrixFile {
  Matrix entries;
  std::string kind;  // "multiplicative" | "additive"
};

MatrixFile read_matrix_json(const std::filesystem::path& path);
void write_matrix_json(const std::filesystem::path& path, const Matrix& m,
                       const std::string& kind);
nlohmann::json matrix_to_json(const Matrix& m, const std::string& kind);

nlohmann::json to_json(const AdditiveScore& s);
nlohmann::json to_json(const ProjectiveScore& s);
AdditiveScore additive_score_from_json(const nlohmann::json& j);
ProjectiveScore projective_score_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TropicalEigenData& data);
nlohmann::json to_json(const PerturbationReport& report);
nlohmann::json to_json(const FiberCertificate& cert);
nlohmann::json to_json(const SweepTable& table);

// "k,objective,mean,stderr,trials,excluded" rows.
std::string sweep_table_csv(const SweepTable& table);

}  // namespace pairrank

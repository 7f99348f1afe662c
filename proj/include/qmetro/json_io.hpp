#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "qmetro/bounds.hpp"
#include "qmetro/estimation.hpp"

// Serialization for the repo-wide JSON schemas:
//   matrix:   {"dim": n, "re": [[...]], "im": [[...]]}  ("im" optional)
//   meanspec: {"s": real, "weight": matrix | "uniform"}
//   family:   {"kind":"unitary", "rho0":matrix, "generators":[matrix...],
//              "commuting":bool} | {"kind":"bloch", "z0":real}
//   qfi:      matrix fields plus {"kind":"SLD"|"RLD"}
//   povm:     {"effects":[matrix...]}

namespace qmetro::io {

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j);

nlohmann::json qfi_to_json(const QfiMatrix& f);
QfiMatrix qfi_from_json(const nlohmann::json& j);

/// "uniform" needs the target dimension from context.
MeanSpec mean_spec_from_json(const nlohmann::json& j, int dim);

ParametricFamily family_from_json(const nlohmann::json& j);

Povm povm_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const BoundReport& r);
std::string report_csv_header();
std::string report_to_csv(const BoundReport& r);

nlohmann::json load_json_file(const std::string& path);

}  // namespace qmetro::io

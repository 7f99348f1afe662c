#include "qmetro/json_io.hpp"

#include <cmath>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace qmetro::io {

using nlohmann::json;

namespace {

Eigen::MatrixXd real_part_from_json(const json& rows, int dim, const char* field) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
        throw ValidationError(std::string("matrix JSON: \"") + field + "\" must be a " +
                              std::to_string(dim) + "-row array");
    }
    Eigen::MatrixXd m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            throw ValidationError(std::string("matrix JSON: row of \"") + field +
                                  "\" has wrong length");
        }
        for (int j = 0; j < dim; ++j) {
            if (!row[j].is_number()) {
                throw ValidationError(std::string("matrix JSON: \"") + field +
                                      "\" entries must be numbers");
            }
            m(i, j) = row[j].get<double>();
        }
    }
    return m;
}

}  // namespace

json matrix_to_json(const Eigen::MatrixXcd& m) {
    const int dim = static_cast<int>(m.rows());
    json re = json::array(), im = json::array();
    for (int i = 0; i < dim; ++i) {
        json re_row = json::array(), im_row = json::array();
        for (int j = 0; j < dim; ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"dim", dim}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("re")) {
        throw ValidationError("matrix JSON: needs \"dim\" and \"re\" fields");
    }
    const int dim = j.at("dim").get<int>();
    if (dim < 1) throw ValidationError("matrix JSON: \"dim\" must be positive");
    const Eigen::MatrixXd re = real_part_from_json(j.at("re"), dim, "re");
    Eigen::MatrixXd im = Eigen::MatrixXd::Zero(dim, dim);
    if (j.contains("im")) im = real_part_from_json(j.at("im"), dim, "im");
    Eigen::MatrixXcd m(dim, dim);
    m.real() = re;
    m.imag() = im;
    return m;
}

json qfi_to_json(const QfiMatrix& f) {
    json j = matrix_to_json(f.matrix);
    j["kind"] = f.kind == QfiKind::SLD ? "SLD" : "RLD";
    return j;
}

QfiMatrix qfi_from_json(const json& j) {
    Eigen::MatrixXcd m = matrix_from_json(j);
    QfiKind kind = QfiKind::SLD;
    if (j.contains("kind")) {
        const std::string k = j.at("kind").get<std::string>();
        if (k == "SLD") {
            kind = QfiKind::SLD;
        } else if (k == "RLD") {
            kind = QfiKind::RLD;
        } else {
            throw ValidationError("QFI JSON: \"kind\" must be \"SLD\" or \"RLD\", got \"" + k + "\"");
        }
    }
    // Validate Hermiticity through the carrier type.
    HermitianMatrix h(m);
    if (kind == QfiKind::SLD && h.mat().imag().cwiseAbs().maxCoeff() > 1e-9) {
        throw ValidationError("QFI JSON: SLD matrix must be real symmetric");
    }
    return QfiMatrix{kind, h.mat()};
}

MeanSpec mean_spec_from_json(const json& j, int dim) {
    if (!j.is_object() || !j.contains("s")) {
        throw ValidationError("mean-spec JSON: needs an \"s\" field");
    }
    const double s = j.at("s").get<double>();
    if (!j.contains("weight") || (j.at("weight").is_string() && j.at("weight") == "uniform")) {
        return MeanSpec(s, WeightMatrix::uniform(dim));
    }
    const Eigen::MatrixXcd w = matrix_from_json(j.at("weight"));
    if (w.imag().cwiseAbs().maxCoeff() > 1e-12) {
        throw ValidationError("mean-spec JSON: weight matrix must be real");
    }
    return MeanSpec(s, WeightMatrix(w.real()));
}

ParametricFamily family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) {
        throw ValidationError("family JSON: needs a \"kind\" field");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "bloch") {
        return bloch_family(j.value("z0", 0.5));
    }
    if (kind == "unitary") {
        DensityOperator rho0{HermitianMatrix(matrix_from_json(j.at("rho0")))};
        std::vector<HermitianMatrix> generators;
        for (const auto& g : j.at("generators")) {
            generators.emplace_back(matrix_from_json(g));
        }
        return unitary_family(rho0, std::move(generators), j.value("commuting", false));
    }
    throw ValidationError("family JSON: unknown kind \"" + kind + "\"");
}

Povm povm_from_json(const json& j) {
    if (!j.is_object() || !j.contains("effects")) {
        throw ValidationError("POVM JSON: needs an \"effects\" array");
    }
    std::vector<HermitianMatrix> effects;
    for (const auto& e : j.at("effects")) effects.emplace_back(matrix_from_json(e));
    return Povm(std::move(effects));
}

json report_to_json(const BoundReport& r) {
    auto field = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
    return json{{"s", r.s},
                {"nu", r.nu},
                {"plain_sld", field(r.plain_bound_sld)},
                {"plain_rld", field(r.plain_bound_rld)},
                {"refined_rld", field(r.refined_bound_rld)},
                {"best", field(r.best)}};
}

std::string report_csv_header() { return "s,nu,plain_sld,plain_rld,refined_rld,best"; }

std::string report_to_csv(const BoundReport& r) {
    std::ostringstream out;
    out.precision(12);
    auto put = [&out](double v) {
        if (std::isfinite(v)) {
            out << v;
        }
    };
    out << r.s << ',' << r.nu << ',';
    put(r.plain_bound_sld);
    out << ',';
    put(r.plain_bound_rld);
    out << ',';
    put(r.refined_bound_rld);
    out << ',';
    put(r.best);
    return out.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace qmetro::io

// qmetro: f-mean quantum Cramer-Rao bounds, QFI matrices, coherence
// measures, and Monte Carlo bound verification.
//
// Exit codes: 0 success, 2 validation error, 3 domain/numerical error.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qmetro/bounds.hpp"
#include "qmetro/coherent_signal.hpp"
#include "qmetro/estimation.hpp"
#include "qmetro/json_io.hpp"
#include "qmetro/resource.hpp"

using nlohmann::json;
using namespace qmetro;

namespace {

std::vector<double> parse_list(const std::string& csv, const char* flag) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ValidationError(std::string(flag) + ": cannot parse \"" + item + "\" as a number");
        }
    }
    if (out.empty()) throw ValidationError(std::string(flag) + ": empty list");
    return out;
}

// "min:max:steps" -> inclusive linear grid.
std::vector<double> parse_grid(const std::string& spec, const char* flag) {
    double lo = 0.0, hi = 0.0;
    int steps = 0;
    char c1 = 0, c2 = 0;
    std::stringstream ss(spec);
    if (!(ss >> lo >> c1 >> hi >> c2 >> steps) || c1 != ':' || c2 != ':' || steps < 1) {
        throw ValidationError(std::string(flag) + ": expected min:max:steps, got \"" + spec + "\"");
    }
    std::vector<double> grid;
    grid.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        grid.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
    }
    return grid;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ValidationError("cannot open output file: " + out_path);
    out << text << '\n';
}

ParametricFamily load_family(const std::string& arg) {
    if (arg.rfind("builtin:", 0) == 0) {
        const std::string name = arg.substr(8);
        if (name == "bloch") return bloch_family(0.5);
        throw ValidationError("unknown builtin family: " + name);
    }
    return io::family_from_json(io::load_json_file(arg));
}

Povm load_povm(const std::string& arg) {
    if (arg.rfind("builtin:", 0) == 0) {
        const std::string name = arg.substr(8);
        if (name == "xy-mixed") return xy_mixed_povm();
        throw ValidationError("unknown builtin POVM: " + name);
    }
    return io::povm_from_json(io::load_json_file(arg));
}

json matrix_json_real(const Eigen::MatrixXd& m) {
    return io::matrix_to_json(m.cast<Complex>());
}

int run_qfi(const std::string& family_arg, const std::string& theta_csv,
            const std::string& out_path) {
    const auto family = load_family(family_arg);
    const auto theta_list = parse_list(theta_csv, "--theta");
    Eigen::VectorXd theta = Eigen::Map<const Eigen::VectorXd>(theta_list.data(),
                                                              static_cast<long>(theta_list.size()));
    const DensityOperator rho = family.evaluate(theta);
    const auto drho = family.derivatives(theta);
    json out;
    out["sld"] = io::qfi_to_json(qfi_sld(rho, drho));
    try {
        out["rld"] = io::qfi_to_json(qfi_rld(rho, drho));
    } catch (const DomainError&) {
        out["rld"] = nullptr;  // rank-deficient state, RLD undefined
    }
    emit(out.dump(2), out_path);
    return 0;
}

int run_bounds(const std::string& sld_path, const std::string& rld_path,
               const std::string& s_csv, const std::string& weights_arg, int nu,
               const std::string& format, const std::string& out_path) {
    std::optional<QfiMatrix> sld, rld;
    if (!sld_path.empty()) sld = io::qfi_from_json(io::load_json_file(sld_path));
    if (!rld_path.empty()) {
        QfiMatrix f = io::qfi_from_json(io::load_json_file(rld_path));
        f.kind = QfiKind::RLD;
        rld = std::move(f);
    }
    if (!sld && !rld) throw ValidationError("bounds: need at least one of --sld / --rld");
    const int dim = static_cast<int>((sld ? sld->matrix : rld->matrix).rows());

    auto make_spec = [&](double s) {
        if (weights_arg == "uniform") return MeanSpec(s, WeightMatrix::uniform(dim));
        const Eigen::MatrixXcd w = io::matrix_from_json(io::load_json_file(weights_arg));
        if (w.imag().cwiseAbs().maxCoeff() > 1e-12) {
            throw ValidationError("--weights: weight matrix must be real");
        }
        return MeanSpec(s, WeightMatrix(w.real()));
    };

    std::vector<BoundReport> reports;
    for (double s : parse_list(s_csv, "--s")) {
        reports.push_back(make_report(sld, rld, make_spec(s), nu));
    }

    if (format == "csv") {
        std::ostringstream out;
        out << io::report_csv_header();
        for (const auto& r : reports) out << '\n' << io::report_to_csv(r);
        emit(out.str(), out_path);
    } else {
        json out = json::array();
        for (const auto& r : reports) out.push_back(io::report_to_json(r));
        emit(out.dump(2), out_path);
    }
    return 0;
}

int run_coherent_signal(double eta, const std::string& s_csv, const std::string& grid1,
                        const std::string& grid2, int trunc, const std::string& out_path) {
    const auto s_set = parse_list(s_csv, "--s");
    json bounds = json::array();
    for (double s : s_set) {
        const SignalBound b = analytic_bound(eta, s);
        bounds.push_back(json{{"s", s},
                              {"sld_bound", b.sld_bound},
                              {"rld_plain", b.rld_plain},
                              {"rld_refined", b.rld_refined},
                              {"overall", b.overall}});
    }
    const auto [fs, fr] = analytic_qfis(eta);
    json out{{"eta", eta},
             {"n_trunc", trunc},
             {"qfi_sld", io::qfi_to_json(fs)},
             {"qfi_rld", io::qfi_to_json(fr)},
             {"bounds", std::move(bounds)}};
    std::cout << out.dump(2) << '\n';

    if (!grid1.empty()) {
        if (out_path.empty()) {
            throw ValidationError("coherent-signal: --grid requires --out for the region CSV");
        }
        const auto e1 = parse_grid(grid1, "--grid");
        const auto e2 = grid2.empty() ? e1 : parse_grid(grid2, "--grid2");
        const auto records = region_scan(eta, e1, e2, s_set);
        std::ofstream csv(out_path);
        if (!csv) throw ValidationError("cannot open output file: " + out_path);
        csv.precision(12);
        csv << "e1,e2,verdict,binding_s\n";
        for (const auto& r : records) {
            csv << r.e1 << ',' << r.e2 << ',' << (r.forbidden ? "forbidden" : "permitted") << ',';
            if (r.forbidden) csv << r.binding_s;
            csv << '\n';
        }
    }
    return 0;
}

int run_coherence(const std::string& state_path, int trials, std::uint64_t seed,
                  const std::string& out_path) {
    DensityOperator rho{HermitianMatrix(io::matrix_from_json(io::load_json_file(state_path)))};
    json out;
    out["exact"] = rho.dim() == 2 ? json(coherence_qubit(rho)) : json(nullptr);
    out["upper_bound"] = coherence_upper_bound(rho, trials, seed);
    out["max_for_dim"] = coherence_max(rho.dim());
    emit(out.dump(2), out_path);
    return 0;
}

int run_verify(const std::string& family_arg, const std::string& povm_arg,
               const std::string& theta_csv, long shots, std::uint64_t seed,
               const std::string& out_path) {
    const auto family = load_family(family_arg);
    const auto povm = load_povm(povm_arg);
    const auto theta_list = parse_list(theta_csv, "--theta");
    Eigen::VectorXd theta = Eigen::Map<const Eigen::VectorXd>(theta_list.data(),
                                                              static_cast<long>(theta_list.size()));
    const auto sim = simulate(family, povm, theta, shots, seed);

    const DensityOperator rho = family.evaluate(theta);
    const auto drho = family.derivatives(theta);
    const QfiMatrix fs = qfi_sld(rho, drho);
    std::optional<QfiMatrix> fr;
    try {
        fr = qfi_rld(rho, drho);
    } catch (const DomainError&) {
    }

    const double max_stderr = sim.stderr_mat.maxCoeff();
    const HermitianMatrix emp{sim.covariance.cast<Complex>()};
    json bounds = json::array();
    json verdicts;
    verdicts["matrix_qcrb"] = matrix_qcrb_holds(emp, fs, 5.0 * max_stderr);
    for (double s : {-1.0, 0.0, 1.0}) {
        const MeanSpec spec(s, WeightMatrix::uniform(family.n_params));
        const BoundReport rep = make_report(fs, fr, spec, 1);
        bounds.push_back(io::report_to_json(rep));
        const double emp_mean = fmean_error(emp, spec);
        verdicts["fmean_s=" + std::to_string(s)] = emp_mean >= rep.best - 3.0 * max_stderr;
    }
    json out{{"empirical_E", matrix_json_real(sim.covariance)},
             {"stderr", matrix_json_real(sim.stderr_mat)},
             {"bounds", std::move(bounds)},
             {"verdicts", std::move(verdicts)}};
    emit(out.dump(2), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"f-mean quantum Cramer-Rao bounds and QFI toolkit"};
    app.require_subcommand(1);

    std::string out_path, format = "json";

    auto* qfi_cmd = app.add_subcommand("qfi", "Compute SLD/RLD QFI matrices for a family");
    std::string qfi_family = "builtin:bloch", qfi_theta = "0,0";
    qfi_cmd->add_option("--family", qfi_family, "family spec JSON file or builtin:bloch");
    qfi_cmd->add_option("--theta", qfi_theta, "comma-separated parameter values");
    qfi_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate f-mean QCRBs from QFI matrices");
    std::string b_sld, b_rld, b_s = "-1,0,1", b_weights = "uniform";
    int b_nu = 1;
    bounds_cmd->add_option("--sld", b_sld, "SLD QFI matrix JSON file");
    bounds_cmd->add_option("--rld", b_rld, "RLD QFI matrix JSON file");
    bounds_cmd->add_option("--s", b_s, "comma-separated s values in [-1,1]");
    bounds_cmd->add_option("--weights", b_weights, "uniform | weight matrix JSON file");
    bounds_cmd->add_option("--nu", b_nu, "number of experiment repetitions");
    bounds_cmd->add_option("--format", format, "json | csv");
    bounds_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* cs_cmd = app.add_subcommand("coherent-signal",
                                      "Closed-form bounds and eigen-error region scan");
    double cs_eta = 1.0;
    std::string cs_s = "-1,0,1", cs_grid, cs_grid2;
    int cs_trunc = 60;
    cs_cmd->add_option("--eta", cs_eta, "mean thermal photon number")->required();
    cs_cmd->add_option("--s", cs_s, "comma-separated s values");
    cs_cmd->add_option("--grid", cs_grid, "E1 grid as min:max:steps");
    cs_cmd->add_option("--grid2", cs_grid2, "E2 grid as min:max:steps (default: same as --grid)");
    cs_cmd->add_option("--trunc", cs_trunc, "Fock-space truncation dimension");
    cs_cmd->add_option("--out", out_path, "region CSV output path");

    auto* coh_cmd = app.add_subcommand("coherence", "Coherence measures for a state");
    std::string coh_state;
    int coh_trials = 2000;
    std::uint64_t seed = 1;
    coh_cmd->add_option("--state", coh_state, "state matrix JSON file")->required();
    coh_cmd->add_option("--trials", coh_trials, "ensemble-search trials");
    coh_cmd->add_option("--seed", seed, "RNG seed");
    coh_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Monte Carlo bound verification");
    std::string v_family = "builtin:bloch", v_povm = "builtin:xy-mixed", v_theta = "0,0";
    long v_shots = 100000;
    verify_cmd->add_option("--family", v_family, "family spec JSON file or builtin:bloch");
    verify_cmd->add_option("--povm", v_povm, "POVM JSON file or builtin:xy-mixed");
    verify_cmd->add_option("--theta", v_theta, "true parameter values");
    verify_cmd->add_option("--shots", v_shots, "number of measurement shots");
    verify_cmd->add_option("--seed", seed, "RNG seed");
    verify_cmd->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (qfi_cmd->parsed()) return run_qfi(qfi_family, qfi_theta, out_path);
        if (bounds_cmd->parsed()) {
            return run_bounds(b_sld, b_rld, b_s, b_weights, b_nu, format, out_path);
        }
        if (cs_cmd->parsed()) {
            return run_coherent_signal(cs_eta, cs_s, cs_grid, cs_grid2, cs_trunc, out_path);
        }
        if (coh_cmd->parsed()) return run_coherence(coh_state, coh_trials, seed, out_path);
        if (verify_cmd->parsed()) {
            return run_verify(v_family, v_povm, v_theta, v_shots, seed, out_path);
        }
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

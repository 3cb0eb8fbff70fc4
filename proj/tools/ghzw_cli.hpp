// Copyright 2026 The ghzw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end. Every subcommand parses flags, calls the library
// and serializes the result; no analysis happens here.
//
// Exit codes: 0 success, 2 invalid input, 1 internal error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ghzw/ghzw.hpp"

namespace ghzw::cli {

using nlohmann::json;

inline json verdict_json(const CriterionVerdict &v) {
    return {{"ghz_min", v.ghz_min},
            {"ghz_opt_phi", v.ghz_opt_phi},
            {"w_min", v.w_min},
            {"w_opt_gamma", v.w_opt_gamma},
            {"w_opt_beta", v.w_opt_beta},
            {"detected_by_ghz", v.detected_by_ghz},
            {"detected_by_w", v.detected_by_w},
            {"detected", v.detected}};
}

inline json entanglement_json(const EntanglementReport &r) {
    json schmidt = json::object();
    for (Qubit q : kAllQubits) {
        const SchmidtPair &s = r.schmidt_by_cut[slot(q)];
        schmidt[qubit_name(q)] = {s.first, s.second};
    }
    json cuts = json::array();
    for (Qubit q : r.biseparable_cuts) cuts.push_back(qubit_name(q));
    return {{"schmidt_by_cut", schmidt},
            {"genuinely_entangled", r.genuinely_entangled},
            {"biseparable_cuts", cuts},
            {"three_tangle", r.three_tangle}};
}

inline json operator_json(const Operator &m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

inline json canonical_json(const CanonicalResult &r) {
    return {{"support", support_name(r.support)},
            {"support_indices", support_indices(r.support)},
            {"lambda", r.params.lambda},
            {"alpha", r.params.alpha},
            {"residual", r.residual},
            {"u_a", operator_json(r.unitaries.u_a)},
            {"u_b", operator_json(r.unitaries.u_b)},
            {"u_c", operator_json(r.unitaries.u_c)}};
}

inline json mixture_report_json(const MixtureReport &r) {
    return {{"n_mixtures", r.n_mixtures},
            {"n_components", r.n_components},
            {"min_ghz_min", r.min_ghz_min},
            {"min_w_min", r.min_w_min},
            {"detected_count", r.detected_count},
            {"all_unwitnessed", r.all_unwitnessed}};
}

struct StateSource {
    std::string builtin;
    std::string state_path;
    std::string rho_path;
    double phi = 0;
    double gamma = 0;
    double beta = 0;
    double rel_phase = 0;
    double a_sq = 0.4;
};

inline PureState builtin_state(const StateSource &s) {
    if (s.builtin == "ghz") return make_ghz(s.phi);
    if (s.builtin == "w") return make_w(s.gamma, s.beta);
    if (s.builtin == "xi") return make_xi();
    if (s.builtin == "superposition") {
        return make_superposition(superposition_params(s.a_sq, s.rel_phase, s.phi, s.gamma, s.beta));
    }
    if (s.builtin == "bell-ab0") return make_bell_ab_zero();
    if (s.builtin == "product") return make_basis_state(0);
    throw ValidationError("unknown builtin state \"" + s.builtin + "\"");
}

inline std::optional<PureState> pure_input(const StateSource &s) {
    if (!s.builtin.empty()) return builtin_state(s);
    if (!s.state_path.empty()) return load_state_file(s.state_path);
    return std::nullopt;
}

inline PureState require_pure(const StateSource &s) {
    if (auto p = pure_input(s)) return *p;
    throw ValidationError("this subcommand needs --builtin or --state");
}

inline DensityMatrix require_density(const StateSource &s) {
    if (!s.rho_path.empty()) return load_density_file(s.rho_path);
    if (auto p = pure_input(s)) return DensityMatrix::from_pure(*p);
    throw ValidationError("this subcommand needs --builtin, --state or --rho");
}

inline void add_state_flags(CLI::App *cmd, StateSource &s, bool allow_rho) {
    auto *b = cmd->add_option("--builtin", s.builtin, "Built-in state: ghz, w, xi, superposition, bell-ab0, product");
    auto *st = cmd->add_option("--state", s.state_path, "Pure-state JSON file");
    st->excludes(b);
    if (allow_rho) {
        auto *r = cmd->add_option("--rho", s.rho_path, "Density-matrix JSON file");
        r->excludes(b)->excludes(st);
    }
    cmd->add_option("--phi", s.phi, "GHZ phase (radians)");
    cmd->add_option("--gamma", s.gamma, "W phase gamma (radians)");
    cmd->add_option("--beta", s.beta, "W phase beta (radians)");
    cmd->add_option("--a-sq", s.a_sq, "|a|^2 for the superposition builtin")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--rel-phase", s.rel_phase, "Phase of a relative to b for the superposition builtin");
}

inline void write_output(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
    } else {
        write_file_atomically(path, text);
    }
}

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Three-qubit GHZ/W entanglement-witness analysis", "ghzw"};
    app.require_subcommand(1);

    StateSource src;
    std::string output;
    double tol = kDetectionTol;
    std::uint64_t seed = 0;

    auto *analyze = app.add_subcommand("analyze", "Witness criterion and entanglement report for one state");
    add_state_flags(analyze, src, true);
    analyze->add_option("--tol", tol, "Detection tolerance");
    analyze->add_option("--output", output, "Write JSON here instead of stdout");

    ScanConfig scan;
    std::string format = "json";
    auto *scan_cmd = app.add_subcommand("scan-family", "Sweep |a|^2 over a|GHZ> + b|W>");
    scan_cmd->add_option("--grid", scan.grid_points, "Number of grid points")->check(CLI::Range(2, 100000000));
    scan_cmd->add_option("--phi", scan.phase_phi, "GHZ phase");
    scan_cmd->add_option("--gamma", scan.phase_gamma, "W phase gamma");
    scan_cmd->add_option("--beta", scan.phase_beta, "W phase beta");
    scan_cmd->add_option("--rel-phase", scan.rel_phase_ab, "Phase of a relative to b");
    scan_cmd->add_option("--seed", scan.seed, "Seed (recorded only; the sweep is deterministic)");
    scan_cmd->add_option("--tol", scan.tol, "Detection tolerance");
    scan_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    scan_cmd->add_option("--output", output, "Write the table here instead of stdout");

    int n_mixtures = 500;
    int n_components = 4;
    AsqWindow window;
    auto *mix_cmd = app.add_subcommand("mixtures", "Random mixtures of undetected family members");
    mix_cmd->add_option("--count", n_mixtures, "Number of mixtures")->check(CLI::PositiveNumber);
    mix_cmd->add_option("--components", n_components, "Components per mixture")->check(CLI::PositiveNumber);
    mix_cmd->add_option("--seed", seed, "Base seed; mixture i uses seed + i");
    mix_cmd->add_option("--tol", tol, "Detection tolerance");
    mix_cmd->add_option("--a-sq-min", window.lo, "Lower end of the |a|^2 window")->check(CLI::Range(0.0, 1.0));
    mix_cmd->add_option("--a-sq-max", window.hi, "Upper end of the |a|^2 window")->check(CLI::Range(0.0, 1.0));
    mix_cmd->add_option("--output", output, "Write JSON here instead of stdout");

    bool stochastic = false;
    int restarts = 32;
    int iters = 500;
    auto *lambda_cmd = app.add_subcommand("lambda", "Largest squared overlap with the biseparable set");
    add_state_flags(lambda_cmd, src, false);
    lambda_cmd->add_flag("--stochastic", stochastic, "Also run the hill-climbing cross-check");
    lambda_cmd->add_option("--seed", seed, "Seed for --stochastic");
    lambda_cmd->add_option("--restarts", restarts, "Restarts for --stochastic")->check(CLI::PositiveNumber);
    lambda_cmd->add_option("--iters", iters, "Iterations per restart for --stochastic")->check(CLI::PositiveNumber);
    lambda_cmd->add_option("--output", output, "Write JSON here instead of stdout");

    auto *canon_cmd = app.add_subcommand("canonical", "Local-unitary normal form of a pure state");
    add_state_flags(canon_cmd, src, false);
    canon_cmd->add_option("--output", output, "Write JSON here instead of stdout");

    auto *ppt_cmd = app.add_subcommand("ppt", "Minimum eigenvalue of each single-qubit partial transpose");
    add_state_flags(ppt_cmd, src, true);
    ppt_cmd->add_option("--output", output, "Write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) {
            json report;
            if (!src.rho_path.empty()) {
                const DensityMatrix rho = load_density_file(src.rho_path);
                report["criterion"] = verdict_json(ghzw_criterion(rho, tol));
                json ppt = json::object();
                for (BipartitionCut cut : kAllCuts) ppt[qubit_name(cut.solo)] = ppt_min_eigenvalue(rho, cut);
                report["ppt_min_eigenvalue"] = ppt;
            } else {
                const PureState psi = require_pure(src);
                report["state"] = state_to_json(psi);
                report["criterion"] = verdict_json(ghzw_criterion(psi, tol));
                report["entanglement"] = entanglement_json(is_genuinely_entangled_pure(psi));
            }
            write_output(report.dump(2) + "\n", output, out);
        } else if (scan_cmd->parsed()) {
            const auto rows = scan_superposition_family(scan);
            write_output(render_table(rows, format == "csv" ? TableFormat::csv : TableFormat::json), output, out);
        } else if (mix_cmd->parsed()) {
            ScanConfig cfg;
            cfg.seed = seed;
            cfg.tol = tol;
            const MixtureReport r = sample_unwitnessed_mixtures(cfg, n_mixtures, n_components, window);
            json report = mixture_report_json(r);
            report["seed"] = seed;
            report["a_sq_window"] = {window.lo, window.hi};
            write_output(report.dump(2) + "\n", output, out);
        } else if (lambda_cmd->parsed()) {
            const PureState psi = require_pure(src);
            json report{{"lambda", lambda_bound_analytic(psi)}};
            if (stochastic) {
                report["lambda_stochastic"] = lambda_bound_stochastic(psi, seed, restarts, iters);
                report["seed"] = seed;
                report["restarts"] = restarts;
                report["iters"] = iters;
            }
            write_output(report.dump(2) + "\n", output, out);
        } else if (canon_cmd->parsed()) {
            const PureState psi = require_pure(src);
            write_output(canonical_json(acin_decompose(psi)).dump(2) + "\n", output, out);
        } else if (ppt_cmd->parsed()) {
            const DensityMatrix rho = require_density(src);
            json report = json::object();
            for (BipartitionCut cut : kAllCuts) report[qubit_name(cut.solo)] = ppt_min_eigenvalue(rho, cut);
            write_output(json{{"ppt_min_eigenvalue", report}}.dump(2) + "\n", output, out);
        }
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace ghzw::cli

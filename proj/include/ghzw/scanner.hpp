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

// Parameter sweeps over the a|GHZ> + b|W> family and over random mixtures
// of its undetected members, plus CSV/JSON table output.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ghzw/classify.hpp"
#include "ghzw/criterion.hpp"

namespace ghzw {

struct ScanConfig {
    int grid_points = 1001;
    double phase_phi = 0;
    double phase_gamma = 0;
    double phase_beta = 0;
    double rel_phase_ab = 0;
    std::uint64_t seed = 0;
    double tol = kDetectionTol;

    void validate() const {
        if (grid_points < 2) throw ValidationError("grid_points must be at least 2");
        if (!(tol > 0)) throw ValidationError("tol must be positive");
        for (double x : {phase_phi, phase_gamma, phase_beta, rel_phase_ab})
            if (!std::isfinite(x)) throw ValidationError("scan phases must be finite");
    }
};

struct ScanRow {
    double a_sq = 0;
    double ghz_min = 0;
    double w_min = 0;
    bool detected_by_ghz = false;
    bool detected_by_w = false;
    bool detected = false;
    bool genuinely_entangled = false;

    friend bool operator==(const ScanRow &, const ScanRow &) = default;
};

inline ScanRow evaluate_superposition(double a_sq, const ScanConfig &cfg) {
    const PureState psi = make_superposition(
        superposition_params(a_sq, cfg.rel_phase_ab, cfg.phase_phi, cfg.phase_gamma, cfg.phase_beta));
    const CriterionVerdict v = ghzw_criterion(psi, cfg.tol);
    return {a_sq,
            v.ghz_min,
            v.w_min,
            v.detected_by_ghz,
            v.detected_by_w,
            v.detected,
            is_genuinely_entangled_pure(psi).genuinely_entangled};
}

/// One row per grid value a_sq = i / (grid_points - 1), ascending.
inline std::vector<ScanRow> scan_superposition_family(const ScanConfig &cfg) {
    cfg.validate();
    std::vector<ScanRow> rows;
    rows.reserve(cfg.grid_points);
    for (int i = 0; i < cfg.grid_points; ++i) {
        const double a_sq = static_cast<double>(i) / (cfg.grid_points - 1);
        rows.push_back(evaluate_superposition(a_sq, cfg));
    }
    return rows;
}

/// Range of |a|^2 the mixture components are drawn from.
struct AsqWindow {
    double lo = 1.0 / 3.0;
    double hi = 0.5;
};

struct MixtureReport {
    int n_mixtures = 0;
    int n_components = 0;
    double min_ghz_min = 0;
    double min_w_min = 0;
    int detected_count = 0;
    bool all_unwitnessed = false;  // both minima >= -tol
};

/// Random point of the probability simplex from sorted uniform spacings.
inline std::vector<double> random_simplex_weights(int n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> cuts(n - 1);
    for (double &c : cuts) c = u(rng);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> w(n);
    double prev = 0;
    for (int i = 0; i < n - 1; ++i) {
        w[i] = cuts[i] - prev;
        prev = cuts[i];
    }
    w[n - 1] = 1.0 - prev;
    return w;
}

/// The mixture drawn for index `index`; its generator is seeded with seed + index.
inline MixtureSpec draw_window_mixture(std::uint64_t seed, int index, int n_components, AsqWindow window = {}) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(index));
    std::uniform_real_distribution<double> asq(window.lo, window.hi);
    std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
    const std::vector<double> weights = random_simplex_weights(n_components, rng);
    MixtureSpec mixture;
    for (int c = 0; c < n_components; ++c) {
        const double a_sq = asq(rng);
        const double rel = phase(rng);
        const double phi = phase(rng);
        const double gamma = phase(rng);
        const double beta = phase(rng);
        mixture.components.push_back({weights[c], make_superposition(superposition_params(a_sq, rel, phi, gamma, beta))});
    }
    return mixture;
}

/// Mixtures of family members with |a|^2 in `window`, checked against the
/// mixed-state criterion. With the default window every mixture should stay
/// undetected.
inline MixtureReport sample_unwitnessed_mixtures(const ScanConfig &cfg, int n_mixtures, int n_components,
                                                 AsqWindow window = {}) {
    cfg.validate();
    if (n_mixtures < 1 || n_components < 1) throw ValidationError("need at least one mixture and one component");
    if (!(window.lo >= 0 && window.lo <= window.hi && window.hi <= 1)) throw ValidationError("bad |a|^2 window");
    MixtureReport r;
    r.n_mixtures = n_mixtures;
    r.n_components = n_components;
    r.min_ghz_min = std::numeric_limits<double>::infinity();
    r.min_w_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_mixtures; ++i) {
        const DensityMatrix rho = mix(draw_window_mixture(cfg.seed, i, n_components, window));
        const CriterionVerdict v = ghzw_criterion(rho, cfg.tol);
        r.min_ghz_min = std::min(r.min_ghz_min, v.ghz_min);
        r.min_w_min = std::min(r.min_w_min, v.w_min);
        if (v.detected) ++r.detected_count;
    }
    r.all_unwitnessed = r.min_ghz_min >= -cfg.tol && r.min_w_min >= -cfg.tol;
    return r;
}

enum class TableFormat { csv, json };

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline constexpr const char *kScanColumns = "a_sq,ghz_min,w_min,detected_by_ghz,detected_by_w,detected,genuinely_entangled";

inline std::string to_csv(const std::vector<ScanRow> &rows) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::string out = kScanColumns;
    out += '\n';
    for (const ScanRow &r : rows) {
        out += format_double(r.a_sq) + ',' + format_double(r.ghz_min) + ',' + format_double(r.w_min) + ',' +
               b(r.detected_by_ghz) + ',' + b(r.detected_by_w) + ',' + b(r.detected) + ',' + b(r.genuinely_entangled) +
               '\n';
    }
    return out;
}

inline nlohmann::json to_json(const ScanRow &r) {
    return {{"a_sq", r.a_sq},
            {"ghz_min", r.ghz_min},
            {"w_min", r.w_min},
            {"detected_by_ghz", r.detected_by_ghz},
            {"detected_by_w", r.detected_by_w},
            {"detected", r.detected},
            {"genuinely_entangled", r.genuinely_entangled}};
}

inline nlohmann::json to_json(const std::vector<ScanRow> &rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ScanRow &r : rows) arr.push_back(to_json(r));
    return arr;
}

inline std::vector<ScanRow> rows_from_json(const nlohmann::json &arr) {
    std::vector<ScanRow> rows;
    for (const auto &o : arr) {
        rows.push_back({o.at("a_sq").get<double>(), o.at("ghz_min").get<double>(), o.at("w_min").get<double>(),
                        o.at("detected_by_ghz").get<bool>(), o.at("detected_by_w").get<bool>(),
                        o.at("detected").get<bool>(), o.at("genuinely_entangled").get<bool>()});
    }
    return rows;
}

inline std::string render_table(const std::vector<ScanRow> &rows, TableFormat format) {
    return format == TableFormat::csv ? to_csv(rows) : to_json(rows).dump(2) + "\n";
}

/// Writes `text` to `path` through a temporary file in the same directory and a rename.
inline void write_file_atomically(const std::filesystem::path &path, const std::string &text) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << text;
        f.flush();
        if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

inline void emit_table(const std::vector<ScanRow> &rows, TableFormat format, std::ostream &out) {
    out << render_table(rows, format);
    if (!out) throw std::runtime_error("failed to write table to stream");
}

inline void emit_table(const std::vector<ScanRow> &rows, TableFormat format, const std::filesystem::path &path) {
    write_file_atomically(path, render_table(rows, format));
}

}  // namespace ghzw

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

// JSON state files.
//
//   pure:    {"dims":[2,2,2],"amplitudes":[[re,im], ... 8 pairs]}
//   density: {"dims":[2,2,2],"matrix":[[[re,im], ... 8], ... 8 rows]}
//
// Entries are ordered by basis index k = 4 q_A + 2 q_B + q_C.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ghzw/states.hpp"

namespace ghzw {

/// Normalization slack accepted when reading a state file; the state is renormalized afterwards.
inline constexpr double kFileNormTol = 1e-10;

namespace detail {

inline Complex complex_field(const nlohmann::json &v, const std::string &where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ValidationError(where + ": expected a [re, im] pair of numbers, got " + v.dump());
    }
    const Complex z(v[0].get<double>(), v[1].get<double>());
    if (!finite(z)) throw ValidationError(where + ": value is not finite");
    return z;
}

inline nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline void check_dims(const nlohmann::json &j) {
    if (!j.is_object()) throw ValidationError("top level: expected a JSON object");
    if (!j.contains("dims")) throw ValidationError("field \"dims\": missing");
    if (j["dims"] != nlohmann::json::array({2, 2, 2})) {
        throw ValidationError("field \"dims\": expected [2,2,2], got " + j["dims"].dump());
    }
}

/// Parses text, turning syntax errors into line/column diagnostics.
inline nlohmann::json parse_text(const std::string &text, const std::string &source) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        const size_t byte = std::min<size_t>(e.byte, text.size());
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < byte; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ValidationError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                              ": malformed JSON (" + e.what() + ")");
    }
}

inline std::string read_text(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ValidationError(path.string() + ": cannot open file");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace detail

inline nlohmann::json state_to_json(const PureState &psi) {
    nlohmann::json amps = nlohmann::json::array();
    for (int k = 0; k < 8; ++k) amps.push_back(detail::complex_json(psi.amp(k)));
    return {{"dims", {2, 2, 2}}, {"amplitudes", amps}};
}

inline PureState state_from_json(const nlohmann::json &j) {
    detail::check_dims(j);
    if (!j.contains("amplitudes")) throw ValidationError("field \"amplitudes\": missing");
    const auto &amps = j["amplitudes"];
    if (!amps.is_array() || amps.size() != 8) {
        throw ValidationError("field \"amplitudes\": expected 8 [re, im] pairs");
    }
    std::array<Complex, 8> a{};
    for (int k = 0; k < 8; ++k) a[k] = detail::complex_field(amps[k], "amplitudes[" + std::to_string(k) + "]");
    const Ket ket(a);
    const double defect = std::abs(ket.norm_sq() - 1.0);
    if (defect > kFileNormTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "field \"amplitudes\": norm^2 = " << ket.norm_sq() << " deviates from 1 by " << defect
            << " (tolerance " << kFileNormTol << ")";
        throw ValidationError(msg.str());
    }
    if (defect <= kPureNormTol) return PureState(ket);
    return PureState::normalize(ket);
}

inline nlohmann::json density_to_json(const DensityMatrix &rho) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 8; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int jx = 0; jx < 8; ++jx) row.push_back(detail::complex_json(rho(i, jx)));
        rows.push_back(row);
    }
    return {{"dims", {2, 2, 2}}, {"matrix", rows}};
}

inline DensityMatrix density_from_json(const nlohmann::json &j) {
    detail::check_dims(j);
    if (!j.contains("matrix")) throw ValidationError("field \"matrix\": missing");
    const auto &m = j["matrix"];
    if (!m.is_array() || m.size() != 8) throw ValidationError("field \"matrix\": expected 8 rows");
    std::array<Complex, 64> e{};
    for (int i = 0; i < 8; ++i) {
        if (!m[i].is_array() || m[i].size() != 8) {
            throw ValidationError("matrix[" + std::to_string(i) + "]: expected 8 entries");
        }
        for (int k = 0; k < 8; ++k) {
            e[8 * i + k] =
                detail::complex_field(m[i][k], "matrix[" + std::to_string(i) + "][" + std::to_string(k) + "]");
        }
    }
    return DensityMatrix(Operator(8, e));
}

inline PureState load_state_file(const std::filesystem::path &path) {
    return state_from_json(detail::parse_text(detail::read_text(path), path.string()));
}

inline DensityMatrix load_density_file(const std::filesystem::path &path) {
    return density_from_json(detail::parse_text(detail::read_text(path), path.string()));
}

}  // namespace ghzw

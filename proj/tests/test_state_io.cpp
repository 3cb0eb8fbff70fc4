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

#include "ghzw/state_io.hpp"

#include "gtest/gtest.h"
#include "ghzw/states.hpp"

using namespace ghzw;
using nlohmann::json;

namespace {

std::string error_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const ValidationError &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(state_io, pure_round_trip) {
    for (int t = 0; t < 50; ++t) {
        const PureState psi = haar_random_pure(t);
        const PureState back = state_from_json(json::parse(state_to_json(psi).dump()));
        for (int k = 0; k < 8; ++k) EXPECT_EQ(back.amp(k), psi.amp(k));
    }
}

TEST(state_io, density_round_trip) {
    const DensityMatrix rho = mix({{{0.25, make_xi()}, {0.75, make_ghz(1.0)}}});
    const DensityMatrix back = density_from_json(json::parse(density_to_json(rho).dump()));
    EXPECT_EQ(back.op(), rho.op());
}

TEST(state_io, malformed_json_reports_line_and_column) {
    const std::string text = "{\n  \"dims\": [2, 2, 2],\n  \"amplitudes\": [1, 2,, 3]\n}\n";
    const std::string msg = error_of([&] { detail::parse_text(text, "in.json"); });
    EXPECT_NE(msg.find("in.json:3:"), std::string::npos) << msg;
}

TEST(state_io, field_errors_name_the_field) {
    EXPECT_NE(error_of([] { state_from_json(json::parse(R"({"amplitudes": []})")); }).find("dims"),
              std::string::npos);
    EXPECT_NE(error_of([] { state_from_json(json::parse(R"({"dims": [2, 2], "amplitudes": []})")); }).find("dims"),
              std::string::npos);
    EXPECT_NE(error_of([] { state_from_json(json::parse(R"({"dims": [2, 2, 2]})")); }).find("amplitudes"),
              std::string::npos);
    json j = state_to_json(make_xi());
    j["amplitudes"][3] = "zero";
    EXPECT_NE(error_of([&] { state_from_json(j); }).find("amplitudes[3]"), std::string::npos);
    json r = density_to_json(DensityMatrix::maximally_mixed());
    r["matrix"][2][5] = json::array({1.0});
    EXPECT_NE(error_of([&] { density_from_json(r); }).find("matrix[2][5]"), std::string::npos);
}

TEST(state_io, norm_defect_is_reported) {
    json j = state_to_json(make_basis_state(0));
    j["amplitudes"][0] = json::array({1.1, 0.0});
    const std::string msg = error_of([&] { state_from_json(j); });
    EXPECT_NE(msg.find("norm"), std::string::npos);
    EXPECT_NE(msg.find("0.21"), std::string::npos) << msg;
}

TEST(state_io, small_norm_defect_is_renormalized) {
    json j = state_to_json(make_basis_state(0));
    j["amplitudes"][0] = json::array({1.0 + 1e-11, 0.0});
    const PureState psi = state_from_json(j);
    EXPECT_NEAR(psi.ket().norm_sq(), 1.0, 1e-15);
}

TEST(state_io, invalid_density_matrices) {
    json r = density_to_json(DensityMatrix::maximally_mixed());
    r["matrix"][0][0] = json::array({1.0, 0.0});
    EXPECT_THROW(density_from_json(r), ValidationError);
}

TEST(state_io, missing_file) {
    EXPECT_NE(error_of([] { load_state_file("/nonexistent/state.json"); }).find("/nonexistent/state.json"),
              std::string::npos);
}

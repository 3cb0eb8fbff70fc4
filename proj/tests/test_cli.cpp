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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ghzw_cli.hpp"
#include "gtest/gtest.h"

using namespace ghzw;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "ghzw");
    std::vector<const char *> argv;
    for (const std::string &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("ghzw_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void spit(const std::filesystem::path &p, const std::string &text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
}

}  // namespace

TEST(cli, analyze_xi) {
    const Result r = run_cli({"analyze", "--builtin", "xi"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["criterion"]["detected"], false);
    EXPECT_EQ(j["criterion"]["ghz_min"].get<double>(), ghzw_criterion(make_xi()).ghz_min);
    EXPECT_EQ(j["criterion"]["w_min"].get<double>(), ghzw_criterion(make_xi()).w_min);
    EXPECT_NEAR(j["criterion"]["ghz_min"].get<double>(), 0.1, 1e-9);
    EXPECT_NEAR(j["criterion"]["w_min"].get<double>(), 1.0 / 15, 1e-9);
    EXPECT_EQ(j["entanglement"]["genuinely_entangled"], true);
}

TEST(cli, analyze_builtins_match_library) {
    const Result g = run_cli({"analyze", "--builtin", "ghz", "--phi", "0.5"});
    ASSERT_EQ(g.code, 0) << g.err;
    EXPECT_EQ(json::parse(g.out)["criterion"], cli::verdict_json(ghzw_criterion(make_ghz(0.5))));
    const Result s = run_cli({"analyze", "--builtin", "superposition", "--a-sq", "0.45"});
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(json::parse(s.out)["criterion"]["detected"], false);
    const Result b = run_cli({"analyze", "--builtin", "bell-ab0"});
    EXPECT_EQ(json::parse(b.out)["entanglement"]["biseparable_cuts"], json::array({"C"}));
}

TEST(cli, analyze_state_and_density_files) {
    const auto sp = temp_path("state.json");
    spit(sp, state_to_json(make_w(0, 0)).dump());
    const Result r = run_cli({"analyze", "--state", sp.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["criterion"]["detected_by_w"], true);

    const auto rp = temp_path("rho.json");
    spit(rp, density_to_json(DensityMatrix::maximally_mixed()).dump());
    const Result m = run_cli({"analyze", "--rho", rp.string()});
    ASSERT_EQ(m.code, 0) << m.err;
    const json j = json::parse(m.out);
    EXPECT_EQ(j["criterion"]["detected"], false);
    EXPECT_NEAR(j["ppt_min_eigenvalue"]["A"].get<double>(), 0.125, 1e-14);
    std::filesystem::remove(sp);
    std::filesystem::remove(rp);
}

TEST(cli, scan_family_csv_is_byte_identical) {
    const auto p1 = temp_path("a.csv");
    const auto p2 = temp_path("b.csv");
    for (const auto &p : {p1, p2}) {
        const Result r = run_cli({"scan-family", "--grid", "201", "--phi", "0.3", "--format", "csv", "--output", p.string()});
        ASSERT_EQ(r.code, 0) << r.err;
    }
    const std::string a = slurp(p1);
    EXPECT_EQ(a, slurp(p2));
    ScanConfig cfg;
    cfg.grid_points = 201;
    cfg.phase_phi = 0.3;
    EXPECT_EQ(a, to_csv(scan_superposition_family(cfg)));
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST(cli, scan_family_json_to_stdout) {
    const Result r = run_cli({"scan-family", "--grid", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out).size(), 3u);
}

TEST(cli, mixtures) {
    const Result r = run_cli({"mixtures", "--count", "20", "--seed", "42"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["n_mixtures"], 20);
    EXPECT_EQ(j["all_unwitnessed"], true);
}

TEST(cli, lambda) {
    const Result r = run_cli({"lambda", "--builtin", "ghz", "--stochastic", "--seed", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_NEAR(j["lambda"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(j["lambda_stochastic"].get<double>(), 0.5, 1e-6);
}

TEST(cli, canonical_and_ppt) {
    const Result c = run_cli({"canonical", "--builtin", "ghz"});
    ASSERT_EQ(c.code, 0) << c.err;
    const json j = json::parse(c.out);
    EXPECT_EQ(j["support"], support_name(AcinSupport::generalized_schmidt));
    EXPECT_NEAR(j["lambda"][0].get<double>(), 1 / std::sqrt(2.0), 1e-12);

    const Result p = run_cli({"ppt", "--builtin", "bell-ab0"});
    ASSERT_EQ(p.code, 0) << p.err;
    EXPECT_NEAR(json::parse(p.out)["ppt_min_eigenvalue"]["A"].get<double>(), -0.5, 1e-12);
}

TEST(cli, exit_codes) {
    EXPECT_EQ(run_cli({"--help"}).code, 0);
    EXPECT_EQ(run_cli({"analyze", "--builtin", "nope"}).code, 2);
    EXPECT_EQ(run_cli({"analyze"}).code, 2);
    EXPECT_EQ(run_cli({"analyze", "--builtin", "xi", "--state", "x.json"}).code, 2);
    EXPECT_EQ(run_cli({"scan-family", "--grid", "1"}).code, 2);
    EXPECT_EQ(run_cli({"scan-family", "--format", "xml"}).code, 2);
    EXPECT_EQ(run_cli({"bogus"}).code, 2);
    EXPECT_EQ(run_cli({"analyze", "--state", "/nonexistent/s.json"}).code, 2);
}

TEST(cli, malformed_state_file_reports_position) {
    const auto p = temp_path("bad.json");
    spit(p, "{\n  \"dims\": [2,2,2],\n  \"amplitudes\": [\n}\n");
    const Result r = run_cli({"analyze", "--state", p.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find(p.string() + ":4:"), std::string::npos) << r.err;
    std::filesystem::remove(p);
}

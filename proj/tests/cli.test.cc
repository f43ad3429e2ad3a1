// Copyright 2026 The qduality Authors
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

#include "qduality/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"
#include "qduality/json_io.h"

using namespace qduality;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string> &args) {
    CliRun r = run(args);
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return json::parse(r.out);
}

std::string write_temp(const std::string &name, const std::string &contents) {
    auto path = std::filesystem::temp_directory_path() / ("qduality_cli_test_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

}  // namespace

TEST(cli, analyze_werner) {
    json j = run_json({"analyze", "--state", "werner", "--R", "0.8"});
    EXPECT_NEAR(j["b_max"].get<double>(), 2 * std::numbers::sqrt2 * 0.8, 1e-12);
    EXPECT_NEAR(j["dD"].get<double>(), 0.8, 1e-12);
    EXPECT_NEAR(j["dD_prime"].get<double>(), 0.8, 1e-12);
    EXPECT_TRUE(j["flags"]["violates_bell"].get<bool>());
    EXPECT_TRUE(j["flags"]["entangled"].get<bool>());
    EXPECT_TRUE(j["flags"]["bell_diagonal"].get<bool>());
}

TEST(cli, analyze_singlet_mixture) {
    json j = run_json({"analyze", "--state", "bell-mixture", "--p", "1,0,0,0"});
    EXPECT_NEAR(j["b_max"].get<double>(), 2 * std::numbers::sqrt2, 1e-12);
    EXPECT_NEAR(j["dD"].get<double>(), 1, 1e-12);
    EXPECT_NEAR(j["dD_prime"].get<double>(), 1, 1e-12);
}

TEST(cli, analyze_state_file) {
    json doc = state_to_json(maximally_mixed());
    std::string path = write_temp("mixed.json", doc.dump());
    json j = run_json({"analyze", "--state", "file", "--path", path});
    EXPECT_EQ(j["b_max"].get<double>(), 0);
    EXPECT_EQ(j["dD"].get<double>(), 0);
    EXPECT_EQ(j["dD_prime"].get<double>(), 0);
    EXPECT_FALSE(j["flags"]["entangled"].get<bool>());
}

TEST(cli, analyze_output_round_trips) {
    for (auto args : std::vector<std::vector<std::string>>{
             {"analyze", "--state", "random", "--seed", "5", "--rank", "3"},
             {"analyze", "--state", "depolarized", "--R1", "0.6", "--R2", "0.3"},
             {"analyze", "--state", "pure", "--schmidt", "0.8"}}) {
        json j = run_json(args);
        auto s = state_from_json(j["rho"]);
        std::string path = write_temp("round_trip.json", j["rho"].dump());
        json again = run_json({"analyze", "--state", "file", "--path", path});
        EXPECT_LE(max_abs_diff(state_from_json(again["rho"]).rho(), s.rho()), 1e-12);
        EXPECT_NEAR(again["b_max"].get<double>(), j["b_max"].get<double>(), 1e-12);
    }
}

TEST(cli, analyze_formats) {
    CliRun csv = run({"analyze", "--state", "singlet", "--format", "csv"});
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out.rfind("key,value\n", 0), 0u);
    EXPECT_NE(csv.out.find("\nb_max,"), std::string::npos);
    CliRun pretty = run({"analyze", "--state", "singlet", "--format", "pretty"});
    EXPECT_EQ(pretty.code, 0);
    EXPECT_NE(pretty.out.find("b_max"), std::string::npos);
    EXPECT_EQ(run({"analyze", "--state", "singlet", "--format", "xml"}).code, kExitBadParameter);
}

TEST(cli, bad_parameters) {
    EXPECT_EQ(run({"analyze", "--state", "werner", "--R", "1.5"}).code, kExitBadParameter);
    EXPECT_EQ(run({"analyze", "--state", "werner"}).code, kExitBadParameter);
    EXPECT_EQ(run({"analyze", "--state", "bell-mixture", "--p", "0.5,0.5,0.5,0.5"}).code, kExitBadParameter);
    EXPECT_EQ(run({"analyze", "--state", "nonsense"}).code, kExitBadParameter);
    EXPECT_EQ(run({"analyze"}).code, kExitBadParameter);
    EXPECT_EQ(run({"analyze", "--state", "random", "--rank", "7"}).code, kExitBadParameter);
    EXPECT_EQ(run({}).code, kExitBadParameter);
    EXPECT_EQ(run({"frobnicate"}).code, kExitBadParameter);
}

TEST(cli, bad_state_files) {
    EXPECT_EQ(run({"analyze", "--state", "file", "--path", "/nonexistent/state.json"}).code, kExitBadStateFile);
    EXPECT_EQ(run({"analyze", "--state", "file", "--path", write_temp("garbage.json", "{not json")}).code,
              kExitBadStateFile);
    EXPECT_EQ(run({"analyze", "--state", "file", "--path", write_temp("shape.json", R"({"re": [[1]], "im": [[0]]})")})
                  .code,
              kExitBadStateFile);
    json unphysical = matrix_to_json(ComplexMatrix4::diagonal({0.5, 0.6, 0, -0.1}));
    EXPECT_EQ(run({"analyze", "--state", "file", "--path", write_temp("neg.json", unphysical.dump())}).code,
              kExitBadStateFile);
}

TEST(cli, verify_passes_and_is_deterministic) {
    CliRun a = run({"verify", "--trials", "200", "--seed", "7"});
    EXPECT_EQ(a.code, kExitOk) << a.err;
    json j = json::parse(a.out);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_EQ(j["random_axes"]["violations"].get<int>(), 0);
    EXPECT_EQ(j["optimal_axes"]["violations"].get<int>(), 0);
    EXPECT_EQ(j["same_meter"]["violations"].get<int>(), 0);

    CliRun b = run({"verify", "--trials", "1", "--seed", "7"});
    CliRun c = run({"verify", "--trials", "1", "--seed", "7"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(b.out, c.out);
}

TEST(cli, verify_rejects_zero_trials) {
    EXPECT_EQ(run({"verify", "--trials", "0"}).code, kExitBadParameter);
}

TEST(cli, verify_csv_rows) {
    CliRun r = run({"verify", "--trials", "3", "--seed", "2", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        count++;
    }
    EXPECT_EQ(count, 1 + 3 * 3);
}

TEST(cli, seed_from_environment) {
    ::setenv("QDUALITY_SEED", "13", 1);
    json env = run_json({"analyze", "--state", "random"});
    ::unsetenv("QDUALITY_SEED");
    json flag = run_json({"analyze", "--state", "random", "--seed", "13"});
    EXPECT_EQ(env["rho"], flag["rho"]);
    EXPECT_EQ(env["state"], flag["state"]);

    ::setenv("QDUALITY_SEED", "abc", 1);
    EXPECT_EQ(run({"analyze", "--state", "random"}).code, kExitBadParameter);
    ::unsetenv("QDUALITY_SEED");
}

TEST(cli, filter_werner_is_identity) {
    json j = run_json({"filter", "--state", "werner", "--R", "0.5"});
    EXPECT_NEAR(j["bell_weights"]["p1"].get<double>(), 0.625, 1e-12);
    EXPECT_NEAR(j["bell_weights"]["p2"].get<double>(), 0.125, 1e-12);
    EXPECT_NEAR(j["bell_weights"]["p3"].get<double>(), 0.125, 1e-12);
    EXPECT_NEAR(j["bell_weights"]["p4"].get<double>(), 0.125, 1e-12);
    EXPECT_EQ(j["iterations"].get<int>(), 0);
    EXPECT_EQ(j["success_prob"].get<double>(), 1);
}

TEST(cli, filter_pure_state) {
    json j = run_json({"filter", "--state", "pure", "--schmidt", "0.8"});
    EXPECT_TRUE(j["converged"].get<bool>());
    EXPECT_LT(j["success_prob"].get<double>(), 1);
    EXPECT_NEAR(j["bell_weights"]["p1"].get<double>(), 1, 1e-8);
    EXPECT_NEAR(j["b_max_after"].get<double>(), 2 * std::numbers::sqrt2, 1e-8);
}

TEST(cli, filter_product_state_is_singular) {
    json doc = state_to_json(pure_state({1, 0, 0, 0}));
    CliRun r = run({"filter", "--state", "file", "--path", write_temp("product.json", doc.dump())});
    EXPECT_EQ(r.code, kExitSingularMarginal);
    EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(cli, help_exits_cleanly) {
    CliRun r = run({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("analyze"), std::string::npos);
}

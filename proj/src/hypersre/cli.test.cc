// Copyright 2026 The hypersre Authors
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

#include "hypersre/cli.h"

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "hypersre/dyadic.h"
#include "json.hpp"

using namespace hypersre;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string> &args, const cli::Environment &env = {}) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err, env);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(const std::vector<std::string> &args) {
    auto r = run_cli(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return nlohmann::json::parse(r.out);
}

std::string write_temp(const std::string &name, const std::string &text) {
    auto path = testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST(cli, exact_chain_3) {
    auto j = run_json({"exact", "--lattice", "chain", "--n", "3", "--alpha", "2"});
    EXPECT_EQ(j["pl_moment"], "11/32");
    EXPECT_EQ(j["pl_moment_decimal"], "0.34375");
    EXPECT_NEAR(j["sre"].get<double>(), 1.5406, 5e-5);
    EXPECT_TRUE(j.contains("elapsed_seconds"));
    auto d = run_json({"exact", "--lattice", "chain", "--n", "3", "--alpha", "2", "--deterministic"});
    EXPECT_FALSE(d.contains("elapsed_seconds"));
}

TEST(cli, bounds_triangular_4) {
    auto j = run_json({"bounds", "--lattice", "triangular", "--l", "4", "--alpha", "2"});
    EXPECT_NEAR(j["jensen"].get<double>(), 14.60, 5e-3);
    EXPECT_EQ(j["h_bar"], "2/1");
    EXPECT_EQ(j["delta_bar"], "6/1");
    EXPECT_LE(j["per_vertex"].get<double>(), j["prev"].get<double>());
}

TEST(cli, recursion) {
    auto fit = run_json({"recursion", "--alpha", "2", "--fit"});
    EXPECT_NEAR(fit["slope"].get<double>(), 0.6637, 5e-4);
    EXPECT_NEAR(fit["intercept"].get<double>(), -0.9125, 5e-3);
    auto point = run_json({"recursion", "--alpha", "2", "--n", "3"});
    EXPECT_EQ(point["pl_moment"], "11/32");
    EXPECT_EQ(point["method"], "recursion");
}

TEST(cli, mc_echoes_seed_and_samples) {
    auto j = run_json({"mc", "--lattice", "chain", "--n", "10", "--alpha", "2", "--samples", "64", "--seed", "5"});
    EXPECT_EQ(j["samples"], 64);
    EXPECT_EQ(j["seed"], 5);
    EXPECT_GT(j["std_error"].get<double>(), 0.0);
    auto d = run_json({"mc", "--lattice", "chain", "--n", "10", "--alpha", "2", "--samples", "64"});
    EXPECT_EQ(d["seed"], 0);
}

TEST(cli, lattice_round_trips_through_input) {
    auto r = run_cli({"lattice", "--lattice", "union-jack", "--l", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto path = write_temp("uj2.json", r.out);
    auto from_file = run_json({"exact", "--input", path, "--alpha", "2", "--deterministic"});
    auto generated = run_json({"exact", "--lattice", "union-jack", "--l", "2", "--alpha", "2", "--deterministic"});
    EXPECT_EQ(from_file, generated);
}

TEST(cli, input_errors_name_the_field) {
    auto r = run_cli({"exact", "--lattice", "triangular", "--l", "2", "--alpha", "2"});
    EXPECT_EQ(r.code, cli::kInputError);
    EXPECT_NE(r.err.find("l:"), std::string::npos);

    r = run_cli({"exact", "--lattice", "chain", "--alpha", "2"});
    EXPECT_EQ(r.code, cli::kInputError);
    EXPECT_NE(r.err.find("--n"), std::string::npos);

    r = run_cli({"exact", "--lattice", "chain", "--n", "4", "--alpha", "two"});
    EXPECT_EQ(r.code, cli::kInputError);
    EXPECT_NE(r.err.find("alpha"), std::string::npos);

    r = run_cli({"exact", "--lattice", "chain", "--n", "4", "--alpha", "2", "--bogus"});
    EXPECT_EQ(r.code, cli::kInputError);
    EXPECT_NE(r.err.find("--bogus"), std::string::npos);

    auto bad = write_temp("bad.json", "{\"n\": 3, \"edges3\": [[0, 1, 2], [0, 1, 2]]}");
    r = run_cli({"exact", "--input", bad, "--alpha", "2"});
    EXPECT_EQ(r.code, cli::kInputError);
    EXPECT_NE(r.err.find("edges3[1]"), std::string::npos);

    auto broken = write_temp("broken.json", "{\"n\": 3,");
    r = run_cli({"exact", "--input", broken, "--alpha", "2"});
    EXPECT_EQ(r.code, cli::kInputError);
    EXPECT_NE(r.err.find("malformed JSON"), std::string::npos);

    r = run_cli({"mc", "--lattice", "chain", "--n", "4", "--alpha", "2", "--samples", "1"});
    EXPECT_EQ(r.code, cli::kInputError);

    r = run_cli({"exact", "--input", bad, "--lattice", "chain", "--n", "3", "--alpha", "2"});
    EXPECT_EQ(r.code, cli::kInputError);
}

TEST(cli, capacity_error_exit_code) {
    auto r = run_cli({"exact", "--lattice", "chain", "--n", "12", "--alpha", "2", "--max-n", "10"});
    EXPECT_EQ(r.code, cli::kCapacityError);
    EXPECT_NE(r.err.find("--max-n"), std::string::npos);
    r = run_cli({"verify", "--lattice", "chain", "--n", "9"});
    EXPECT_EQ(r.code, cli::kCapacityError);
}

TEST(cli, verify_exit_codes) {
    auto ok = run_cli({"verify", "--lattice", "chain", "--n", "5"});
    EXPECT_EQ(ok.code, cli::kOk);
    EXPECT_EQ(nlohmann::json::parse(ok.out)["passed"], true);

    cli::Environment broken;
    broken.verify_moment = [](const Hypergraph3 &, const Alpha &) {
        PlMoment m;
        m.value = 0.5;
        m.exact = Dyadic::pow2(-1);
        return m;
    };
    auto bad = run_cli({"verify", "--lattice", "chain", "--n", "5"}, broken);
    EXPECT_EQ(bad.code, cli::kVerificationFailure);
    EXPECT_EQ(nlohmann::json::parse(bad.out)["passed"], false);
}

TEST(cli, scan_skips_invalid_sizes) {
    auto j = run_json({"scan", "--lattice", "triangular", "--from", "2", "--to", "3", "--alpha", "2"});
    ASSERT_EQ(j["skipped"].size(), 1u);
    EXPECT_EQ(j["skipped"][0]["size"], 2);
    ASSERT_EQ(j["records"].size(), 1u);
    EXPECT_EQ(j["records"][0]["n"], 9);
    EXPECT_EQ(j["records"][0]["method"], "exact");
}

TEST(cli, scan_switches_to_monte_carlo) {
    auto j = run_json(
        {"scan", "--lattice", "union-jack", "--from", "2", "--to", "3", "--alpha", "2", "--max-n", "10", "--samples",
         "32"});
    ASSERT_EQ(j["records"].size(), 2u);
    EXPECT_EQ(j["records"][0]["method"], "exact");
    EXPECT_FALSE(j["records"][0].contains("std_error"));
    EXPECT_EQ(j["records"][1]["method"], "monte_carlo");
    EXPECT_GT(j["records"][1]["std_error"].get<double>(), 0.0);
}

TEST(cli, help_is_success) {
    auto r = run_cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("exact"), std::string::npos);
}

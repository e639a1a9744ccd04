// Copyright 2026 The latcirc Authors
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

#include <gtest/gtest.h>

#include <array>
#include <complex>
#include <unistd.h>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>
#include <fstream>
#include <sys/wait.h>

#include "json.hpp"

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

const std::string kBin = LATCIRC_BIN;
const std::string kFixtures = LATCIRC_FIXTURES;

struct Proc {
    int code = -1;
    std::string out;
};

Proc run(const std::string &args) {
    Proc r;
    std::string cmd = kBin + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
        r.out.append(buf.data(), n);
    }
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Proc shell(const std::string &cmd) {
    Proc r;
    FILE *p = popen((cmd + " 2>/dev/null").c_str(), "r");
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
        r.out.append(buf.data(), n);
    }
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::complex<double> z_of(const json &j, const char *key = "Z") {
    return {j.at(key)[0].get<double>(), j.at(key)[1].get<double>()};
}

fs::path scratch() {
    fs::path d = fs::temp_directory_path() / ("latcirc_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

std::string model(const char *name) { return kFixtures + "/models/" + name; }
std::string circuit(const char *name) { return kFixtures + "/circuits/" + name; }

}  // namespace

TEST(Cli, PartitionSingleEdge) {
    Proc r = run("partition " + model("ising_single_edge.json"));
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["Z"], json::parse("[6.0, 0.0]"));
    EXPECT_EQ(j["latcirc_schema"], 1);
}

TEST(Cli, MapThenSimulateEqualsPartition) {
    for (const char *m : {"ising_single_edge.json", "ising_periodic.json", "sixvertex_single_V.json", "potts_phase.json",
                          "lgt_rz_block.json"}) {
        Proc p = run("partition --cap 100000 " + model(m));
        Proc s = shell(kBin + " map " + model(m) + " | " + kBin + " simulate -");
        ASSERT_EQ(p.code, 0) << m;
        ASSERT_EQ(s.code, 0) << m;
        EXPECT_LT(std::abs(z_of(json::parse(p.out)) - z_of(json::parse(s.out))), 1e-9) << m;
    }
}

TEST(Cli, VerifyAllPasses) {
    Proc r = run("verify --all --fixtures " + kFixtures);
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(json::parse(r.out)["pass"].get<bool>());
}

TEST(Cli, RecipeReport) {
    Proc r = run("verify --recipe potts.H --epsilon 1e-3");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_LT(j["max_distance"].get<double>(), 2.8e-6);
    Proc s = run("verify --recipe potts.H_scaling");
    EXPECT_NEAR(json::parse(s.out)["fitted_slope"].get<double>(), 2.0, 0.2);
    EXPECT_EQ(run("verify --recipe nonsense").code, 2);
}

TEST(Cli, ValidationErrorsExitTwo) {
    EXPECT_EQ(run("partition --bogus " + model("ising_single_edge.json")).code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("partition /does/not/exist.json").code, 2);
    fs::path d = scratch();
    std::ofstream(d / "v2.json") << R"({"latcirc_schema": 2, "kind": "model", "family": "edge"})";
    EXPECT_EQ(run("partition " + (d / "v2.json").string()).code, 2);
    std::ofstream(d / "noversion.json") << R"({"kind": "model", "family": "edge"})";
    EXPECT_EQ(run("map " + (d / "noversion.json").string()).code, 2);
    EXPECT_EQ(run("compile --target heisenberg " + circuit("ising_two_wire.json")).code, 2);
    EXPECT_EQ(run("estimate --delta 2 " + circuit("ising_two_wire.json")).code, 2);
    fs::remove_all(d);
}

TEST(Cli, CompileAuditAndEstimate) {
    fs::path d = scratch();
    std::string inst = (d / "inst.json").string(), audit = (d / "audit.json").string();
    ASSERT_EQ(run("compile --target dqc1 " + circuit("dqc1_two_wire.json") + " -o " + inst + " --audit " + audit).code,
              0);
    json a = json::parse(std::ifstream(audit));
    EXPECT_EQ(a["kind"], "audit");
    EXPECT_FALSE(a["provenance"].empty());
    Proc e1 = run("estimate " + inst + " --epsilon 0.05 --delta 0.01 --seed 42");
    Proc e2 = shell("LATCIRC_THREADS=1 " + kBin + " estimate " + inst + " --epsilon 0.05 --delta 0.01 --seed 42");
    ASSERT_EQ(e1.code, 0);
    EXPECT_EQ(e1.out, e2.out);
    json j = json::parse(e1.out);
    EXPECT_LT(std::abs(z_of(j, "value") - z_of(j, "exact")), 0.05 * std::sqrt(2.0));
    Proc p = run("partition " + inst);
    json pj = json::parse(p.out);
    EXPECT_LT(std::abs(z_of(pj, "normalized") - z_of(pj, "source")), 1e-9);
    fs::remove_all(d);
}

TEST(Cli, RerunsAreByteIdentical) {
    for (const std::string &args : std::vector<std::string>{"demo", "compile " + circuit("potts_bell.json"), "map " + model("potts_phase.json")}) {
        Proc a = run(args), b = run(args);
        EXPECT_EQ(a.code, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, DemoMatchesGolden) {
    Proc r = run("demo");
    ASSERT_EQ(r.code, 0);
    json got = json::parse(r.out), want = json::parse(std::ifstream(kFixtures + "/golden/demo.json"));
    ASSERT_EQ(got["results"].size(), want["results"].size());
    for (size_t i = 0; i < want["results"].size(); i++) {
        const json &g = got["results"][i], &w = want["results"][i];
        EXPECT_EQ(g["name"], w["name"]);
        for (const char *k : {"source", "mapped", "oracle", "kappa"}) {
            EXPECT_LT(std::abs(z_of(g, k) - z_of(w, k)), 1e-12) << w["name"] << " " << k;
        }
    }
}

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

#include "latcirc/compile.h"

#include <gtest/gtest.h>

#include "generators.h"
#include "latcirc/encodings.h"
#include "latcirc/map.h"
#include "oracles.h"

using namespace latcirc;

namespace {

const cplx kOmega = std::polar(1.0, kPi / 4);

cplx z_over_kappa(const CompiledInstance &ci) {
    return normalized(ci, oracle::Z(ci.model));
}

template <class F>
ErrorKind kind_of(F f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::InvalidConfig;
}

}  // namespace

TEST(CompileIsing, EmptyCircuitIsPlusVPlus) {
    LogicalCircuit c{1, {}};
    CompiledInstance ci = compile_to_ising(c);
    // <+|V|+> = (omega + 1) / 2
    cplx want = (kOmega + 1.0) / 2.0;
    EXPECT_LT(std::abs(z_over_kappa(ci) - want), 1e-12);
    EXPECT_LT(std::abs(source_value(ci) - want), 1e-12);
}

TEST(CompileIsing, SingleTMatchesHandValue) {
    LogicalCircuit c{1, {{"T", {0}, {}, {}}}};
    CompiledInstance ci = compile_to_ising(c);
    const auto &gs = ising_gate_set();
    Vec plus = Vec::Ones(2) / std::sqrt(2.0);
    Mat V = Mat::Identity(2, 2);
    V(0, 0) = kOmega;
    Mat Wbar = Mat{{kI, 1.0}, {1.0, kI}} / std::sqrt(2.0);
    cplx want = (plus.adjoint() * V * Wbar * V * plus)(0, 0);
    EXPECT_LT(std::abs(z_over_kappa(ci) - want), 1e-12);
    EXPECT_LT(std::abs(source_value(ci) - want), 1e-12);
    EXPECT_TRUE(is_unitary(gs.T, 1e-12));
}

TEST(CompileIsing, RandomRoundTrips) {
    gen::Rng rng(11);
    for (int t = 0; t < 20; t++) {
        int n = gen::uniform_int(rng, 1, 3);
        LogicalCircuit c = gen::random_logical(rng, CompileTarget::Ising, n, gen::uniform_int(rng, 0, 5));
        CompiledInstance ci = compile_to_ising(c);
        RoundTrip rt = round_trip(ci);
        EXPECT_TRUE(rt.pass) << t << " err " << rt.error << " " << rt.note;
        EXPECT_LT(std::abs(z_over_kappa(ci) - rt.source), 1e-9);
        EXPECT_TRUE(compiled_whitelisted(ci));
    }
}

TEST(CompileIsing, RejectsForeignGates) {
    LogicalCircuit c{2, {{"CZ", {0, 1}, {}, {}}}};
    EXPECT_EQ(kind_of([&] { compile_to_ising(c); }), ErrorKind::UnsupportedGate);
    LogicalCircuit far{3, {{"TWvT", {0, 2}, {}, {}}}};
    EXPECT_EQ(kind_of([&] { compile_to_ising(far); }), ErrorKind::UnsupportedGate);
}

TEST(CompileDqc1, IdentityGivesOne) {
    LogicalCircuit c{2, {}};
    CompiledInstance ci = dqc1_instance(c);
    // A A = V on each wire: 2^-2 Tr(V x V) = ((1 + omega) / 2)^2
    cplx want = std::pow((1.0 + kOmega) / 2.0, 2);
    EXPECT_LT(std::abs(z_over_kappa(ci) - want), 1e-12);
    EXPECT_TRUE(ci.trace);
}

TEST(CompileDqc1, RandomTraces) {
    gen::Rng rng(12);
    for (int t = 0; t < 15; t++) {
        int n = gen::uniform_int(rng, 1, 3);
        LogicalCircuit c = gen::random_logical(rng, CompileTarget::Dqc1, n, gen::uniform_int(rng, 0, 5));
        CompiledInstance ci = dqc1_instance(c);
        Mat u = oracle::dense_circuit(ci.reference);
        cplx want = u.trace() / std::pow(2.0, n);
        EXPECT_LT(std::abs(z_over_kappa(ci) - want), 1e-9) << t;
        EXPECT_TRUE(round_trip(ci).pass) << t;
    }
}

TEST(CompileSixVertex, SingleVGivesInverseRootTwo) {
    LogicalCircuit c{2, {{"V", {0, 1}, {}, {}}}};
    CompiledInstance ci = compile_to_six_vertex(c);
    EXPECT_LT(std::abs(z_over_kappa(ci) - 1.0 / std::sqrt(2.0)), 1e-12);
    EXPECT_LT(std::abs(z_over_kappa(ci) - source_value(ci)), 1e-12);
}

TEST(CompileSixVertex, RandomRoundTrips) {
    gen::Rng rng(13);
    for (int t = 0; t < 20; t++) {
        int n = 2 * gen::uniform_int(rng, 1, 2);
        LogicalCircuit c = gen::random_logical(rng, CompileTarget::SixVertex, n, gen::uniform_int(rng, 1, 6));
        CompileOptions o;
        o.left_bits = gen::random_spins(rng, n, 2);
        o.right_bits = gen::random_spins(rng, n, 2);
        CompiledInstance ci = compile_to_six_vertex(c, o);
        RoundTrip rt = round_trip(ci, 1e-8, EnumerationOptions{40});
        EXPECT_TRUE(rt.pass) << t << " err " << rt.error << " " << rt.note;
        EXPECT_TRUE(compiled_whitelisted(ci));
    }
}

TEST(CompileSixVertex, RejectsDenseGate) {
    LogicalCircuit c{2, {{"matrix", {0, 1}, {}, Mat::Ones(4, 4)}}};
    EXPECT_EQ(kind_of([&] { compile_to_six_vertex(c); }), ErrorKind::NotSixVertexForm);
}

TEST(CompilePotts, PhaseOnOne) {
    LogicalCircuit c{1, {{"P", {0}, {}, {}}}};
    CompileOptions o;
    o.left_bits = {1};
    o.right_bits = {1};
    CompiledInstance ci = compile_to_potts(c, o);
    EXPECT_LT(std::abs(z_over_kappa(ci) - std::polar(1.0, kPi / 8)), 1e-12);
}

TEST(CompilePotts, HadamardNearInverseRootTwo) {
    LogicalCircuit c{1, {{"H", {0}, {}, {}}}};
    CompiledInstance ci = compile_to_potts(c);
    EXPECT_LT(std::abs(z_over_kappa(ci) - 1.0 / std::sqrt(2.0)), 1e-5);
    EXPECT_GT(ci.approximation_bound, 0.0);
}

TEST(CompilePotts, RandomRoundTrips) {
    gen::Rng rng(14);
    CompileOptions o;
    o.epsilon = 1e-5;
    for (int t = 0; t < 12; t++) {
        int n = gen::uniform_int(rng, 1, 2);
        LogicalCircuit c = gen::random_logical(rng, CompileTarget::Potts, n, gen::uniform_int(rng, 1, 4));
        o.left_bits = gen::random_spins(rng, n, 2);
        o.right_bits = gen::random_spins(rng, n, 2);
        CompiledInstance ci = compile_to_potts(c, o);
        RoundTrip rt = round_trip(ci, 1e-8, EnumerationOptions{40});
        EXPECT_TRUE(rt.pass) << t << " err " << rt.error << " " << rt.note;
        EXPECT_TRUE(compiled_whitelisted(ci));
    }
}

TEST(CompilePotts, WidthCap) {
    LogicalCircuit c{7, {}};
    EXPECT_EQ(kind_of([&] { compile_to_potts(c); }), ErrorKind::WidthExceeded);
}

TEST(CompileLgt, RzAndDiagExact) {
    LogicalCircuit rzc{1, {{"Rz", {0}, {0.7}, {}}}};
    CompileOptions o;
    o.left_bits = {0};
    o.right_bits = {0};
    EXPECT_LT(std::abs(normalized(compile_to_lgt(rzc, o), evaluate(map_model(compile_to_lgt(rzc, o).model))) - 1.0),
              1e-12);
    LogicalCircuit d{2, {{"diag", {0, 1}, {}, {}}}};
    o.left_bits = {1, 1};
    o.right_bits = {1, 1};
    CompiledInstance ci = compile_to_lgt(d, o);
    EXPECT_LT(std::abs(normalized(ci, evaluate(map_model(ci.model))) - 1.0), 1e-12);
}

TEST(CompileLgt, RandomSingleBlockRoundTrips) {
    gen::Rng rng(15);
    for (int t = 0; t < 12; t++) {
        int n = gen::uniform_int(rng, 1, 2);
        LogicalCircuit c = gen::random_logical(rng, CompileTarget::Lgt, n, gen::uniform_int(rng, 1, 5), n == 1 ? 1 : 0);
        CompileOptions o;
        o.left_bits = gen::random_spins(rng, n, 2);
        o.right_bits = gen::random_spins(rng, n, 2);
        CompiledInstance ci = compile_to_lgt(c, o);
        RoundTrip rt = round_trip(ci);
        EXPECT_TRUE(rt.pass) << t << " err " << rt.error << " " << rt.note;
        EXPECT_TRUE(compiled_whitelisted(ci));
    }
}

TEST(CompileLgt, ProvenanceCoversEveryGate) {
    LogicalCircuit c{2, {{"H", {0}, {}, {}}, {"Rz", {1}, {0.2}, {}}, {"H", {1}, {}, {}}, {"diag", {0, 1}, {}, {}}}};
    CompiledInstance ci = compile_to_lgt(c);
    std::vector<bool> seen(c.gates.size(), false);
    for (const auto &p : ci.provenance) {
        if (p.gate >= 0) {
            seen[static_cast<size_t>(p.gate)] = true;
        }
    }
    for (bool s : seen) {
        EXPECT_TRUE(s);
    }
    EXPECT_EQ(ci.parameters.at("blocks"), 2);
}

TEST(Compile, TargetNamesRoundTrip) {
    for (CompileTarget t : {CompileTarget::Ising, CompileTarget::SixVertex, CompileTarget::Potts, CompileTarget::Lgt,
                            CompileTarget::Dqc1}) {
        EXPECT_EQ(parse_compile_target(compile_target_name(t)), t);
    }
    EXPECT_EQ(kind_of([] { parse_compile_target("heisenberg"); }), ErrorKind::InvalidConfig);
}

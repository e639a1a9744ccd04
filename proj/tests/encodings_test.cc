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

#include "latcirc/encodings.h"

#include <gtest/gtest.h>

#include "generators.h"
#include "latcirc/qcirc.h"
#include "oracles.h"

using namespace latcirc;

namespace {

Mat diag2(cplx a, cplx b) {
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

Vec ket(std::initializer_list<cplx> v) {
    Vec out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (cplx x : v) {
        out(i++) = x;
    }
    return out;
}

Vec unit(Eigen::Index dim, Eigen::Index k) {
    Vec v = Vec::Zero(dim);
    v(k) = 1.0;
    return v;
}

}  // namespace

TEST(SixVertex, IdentityAtZero) {
    EXPECT_LT((six_vertex_gates(0.0).U - Mat::Identity(4, 4)).norm(), 1e-15);
}

TEST(SixVertex, MatchesExchangeExponential) {
    gen::Rng rng(3);
    Mat x = oracle::pauli_x(), y = oracle::pauli_y(), z = oracle::pauli_z();
    Mat hex = kron(x, x) + kron(y, y) + kron(z, z);
    for (int k = 0; k < 20; k++) {
        double t = gen::uniform(rng, -3.0, 3.0);
        Mat u = six_vertex_gates(t).U;
        EXPECT_TRUE(is_six_vertex_form(u));
        EXPECT_LT(distance_up_to_phase(u, oracle::expm(kI * t * hex)), 1e-12) << t;
    }
}

TEST(SixVertex, VMakesSinglet) {
    Mat v = six_vertex_gates(0.3).V;
    Vec out = v * unit(4, 1);
    EXPECT_LT((out - ket({0.0, 1.0, -1.0, 0.0}) / std::sqrt(2.0)).norm(), 1e-15);
    EXPECT_TRUE(is_six_vertex_form(v));
    EXPECT_TRUE(is_unitary(v));
}

TEST(SixVertex, LogicalZeroFromStaggeredState) {
    Mat v = six_vertex_gates(0.0).V;
    Vec s = ket({0.0, 1.0, -1.0, 0.0}) / std::sqrt(2.0);
    Vec expected = kron(s, s);
    Vec out = kron(v, v) * unit(16, 0b0101);
    EXPECT_LT((out - expected).norm(), 1e-12);
    EXPECT_LT((six_vertex_encoding().zero - expected).norm(), 1e-15);
}

TEST(SixVertex, FormDetectsViolations) {
    Mat g = Mat::Identity(4, 4);
    g(0, 3) = 0.1;
    EXPECT_FALSE(is_six_vertex_form(g));
    EXPECT_FALSE(is_six_vertex_form(Mat::Identity(2, 2)));
}

TEST(Ising, GateValues) {
    const auto &s = ising_gate_set();
    EXPECT_EQ(s.W_h(0, 0), kI);
    EXPECT_EQ(s.W_h(0, 1), cplx(1.0));
    EXPECT_TRUE(is_unitary(s.W_h_bar));
    EXPECT_TRUE(is_unitary(s.K));
    EXPECT_TRUE(is_unitary(s.T));
    EXPECT_TRUE(is_unitary(s.T2_Wv_T2));
}

TEST(Ising, CompositeHadamard) {
    EXPECT_LT(distance_up_to_phase(ising_composite_h(), oracle::hadamard()), 1e-12);
}

TEST(Ising, CompositePhase) {
    EXPECT_LT(distance_up_to_phase(ising_composite_p(), diag2(1.0, kI)), 1e-12);
}

TEST(Ising, WvSquaredIsZZ) {
    const auto &s = ising_gate_set();
    Mat z = oracle::pauli_z();
    EXPECT_LT(distance_up_to_phase(s.W_v * s.W_v, kron(z, z)), 1e-12);
}

TEST(Ising, ConjugationIdentities) {
    const auto &s = ising_gate_set();
    EXPECT_LT(distance_up_to_phase(s.V_half * s.K * s.V_half.adjoint(), s.T), 1e-12);
    Mat vv = kron(s.V_half, s.V_half);
    EXPECT_LT(distance_up_to_phase(vv * s.W_v * vv.adjoint(), s.W_v), 1e-12);
}

TEST(InversePower, PhaseGate) {
    InversePower r = find_inverse_power(diag2(1.0, kI), 1e-9);
    EXPECT_EQ(r.m, 3);
    EXPECT_LT(r.distance, 1e-12);
}

TEST(InversePower, PauliZ) { EXPECT_EQ(find_inverse_power(oracle::pauli_z(), 1e-9).m, 1); }

TEST(InversePower, KTerminates) {
    const auto &s = ising_gate_set();
    InversePower r = find_inverse_power(s.K, 1e-2);
    Mat p = Mat::Identity(2, 2);
    for (long i = 0; i < r.m; i++) {
        p = p * s.K;
    }
    EXPECT_LT(distance_up_to_phase(p, s.K.adjoint()), 1e-2);
    EXPECT_EQ(r.m, 138);
}

TEST(InversePower, Exhausted) {
    const auto &s = ising_gate_set();
    try {
        find_inverse_power(s.K, 1e-9, 50);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::SearchExhausted);
    }
}

TEST(Potts, Encoding) {
    Vec e = embed(potts_encoding(), ket({0.6, 0.8}));
    EXPECT_EQ(e.size(), 9);
    EXPECT_NEAR(e(0 * 3 + 1).real(), 0.6, 1e-15);
    EXPECT_NEAR(e(1 * 3 + 2).real(), 0.8, 1e-15);
}

TEST(Potts, ExactRecipes) {
    for (const GateRecipe &r : {potts_I1(), potts_P(), potts_I2(), potts_CZ()}) {
        RecipeReport rep = verify_recipe(r, 10);
        EXPECT_TRUE(rep.pass) << r.name << " " << rep.max_distance;
        EXPECT_TRUE(recipe_whitelisted(r)) << r.name;
    }
}

TEST(Potts, CZOnBasis) {
    GateRecipe r = potts_CZ();
    for (int b = 0; b < 4; b++) {
        Vec out = execute_recipe(r, unit(4, b));
        Vec want = embed(potts_encoding(), unit(4, b)) * (b == 3 ? -1.0 : 1.0);
        EXPECT_LT((out - want).norm(), 1e-15) << b;
    }
}

TEST(Potts, PhaseOnOne) {
    Vec out = execute_recipe(potts_P(), unit(2, 1));
    EXPECT_LT((out - std::polar(1.0, kPi / 8) * embed(potts_encoding(), unit(2, 1))).norm(), 1e-15);
}

TEST(Potts, HadamardSmallEpsilon) {
    GateRecipe r = potts_H(1e-3);
    Vec out = execute_recipe(r, unit(2, 0));
    Vec want = embed(potts_encoding(), ket({1.0, 1.0}) / std::sqrt(2.0));
    EXPECT_LT((out - want).norm(), 1e-5);
    EXPECT_TRUE(recipe_whitelisted(r));
}

TEST(Potts, HadamardSlope) {
    RecipeReport rep = verify_potts_h_scaling({1e-2, 3e-3, 1e-3}, 10);
    ASSERT_TRUE(rep.fitted_slope.has_value());
    EXPECT_NEAR(*rep.fitted_slope, 2.0, 0.2);
    // Measured 1.4e-6 at epsilon = 1e-3; bound keeps 2x headroom.
    EXPECT_LT(rep.scan.back().second, 2.8e-6);
}

TEST(Potts, BadEpsilon) {
    for (double e : {0.0, -1e-3, 0.2}) {
        try {
            potts_H(e);
            FAIL();
        } catch (const Error &err) {
            EXPECT_EQ(err.kind(), ErrorKind::BadEpsilon);
        }
    }
}

TEST(Potts, AuxiliaryReuseFails) {
    GateRecipe r = potts_CZ();
    r.steps.push_back(r.steps.back());
    EXPECT_THROW(execute_recipe(r, unit(4, 0)), Error);
}

TEST(Lgt, RzZeroIsIdentity) {
    EXPECT_TRUE(verify_recipe(lgt_Rz(0.0), 10).pass);
}

TEST(Lgt, RzAndDiagExact) {
    gen::Rng rng(5);
    for (int k = 0; k < 5; k++) {
        GateRecipe r = lgt_Rz(gen::uniform(rng, 0.0, 2 * kPi - 1e-9));
        EXPECT_TRUE(verify_recipe(r, 10).pass);
        EXPECT_TRUE(recipe_whitelisted(r));
    }
    GateRecipe d = lgt_diag();
    EXPECT_TRUE(verify_recipe(d, 10).pass);
    EXPECT_TRUE(recipe_whitelisted(d));
}

TEST(Lgt, DiagOnOneZero) {
    Vec out = execute_recipe(lgt_diag(), unit(4, 2));
    EXPECT_LT((out - kI * embed(lgt_encoding(), unit(4, 2))).norm(), 1e-15);
}

TEST(Lgt, TeleportOnZero) {
    GateRecipe r = lgt_teleport_H(0.0);
    Vec out = execute_recipe(r, unit(2, 0));
    // sqrt(2) Rz(pi/2) H |0> = |0> + i|1>.
    Vec want = embed(lgt_encoding(), ket({1.0, kI}));
    EXPECT_LT((out - want).norm(), 1e-12);
}

TEST(Lgt, TeleportRandomAlpha) {
    gen::Rng rng(8);
    Mat h = oracle::hadamard();
    for (int k = 0; k < 10; k++) {
        double alpha = gen::uniform(rng, 0.0, 2 * kPi);
        Vec psi = gen::random_state(rng, 2);
        Vec out = execute_recipe(lgt_teleport_H(alpha), psi);
        Vec want = embed(lgt_encoding(), std::sqrt(2.0) * diag2(1.0, kI) * h * diag2(1.0, std::polar(1.0, alpha)) * psi);
        EXPECT_LT((out - want).norm(), 1e-8);
    }
}

TEST(Lgt, TeleportPrefactor) {
    GateRecipe r = lgt_teleport_H(0.0);
    EXPECT_NEAR(r.metadata.at("aux_prefactor"), 16.0, 1e-12);
    EXPECT_TRUE(recipe_whitelisted(r));
}

TEST(Lgt, I1Leaks) {
    RecipeReport rep = verify_recipe(lgt_I1(1e-3), 5, 1, 1e-2);
    EXPECT_TRUE(rep.pass);
    EXPECT_GT(rep.max_distance, 1e-4);
    EXPECT_THROW(lgt_I1(0.5), Error);
}

TEST(Euler, RoundTrip) {
    gen::Rng rng(11);
    for (int k = 0; k < 100; k++) {
        Mat u = gen::random_unitary(rng, 2);
        EulerAngles e = euler_angles(u);
        EXPECT_LT((euler_compose(e) - u).norm(), 1e-9);
    }
}

TEST(Euler, DiagonalAndAntidiagonal) {
    for (const Mat &u : {Mat(diag2(kI, -1.0)), Mat(oracle::pauli_x()), Mat(oracle::hadamard())}) {
        EXPECT_LT((euler_compose(euler_angles(u)) - u).norm(), 1e-12);
    }
}

TEST(CZ, FromDiag) {
    Mat cz = Mat::Identity(4, 4);
    cz(3, 3) = -1.0;
    EXPECT_LT((cz_from_diag() - cz).norm(), 1e-15);
}

TEST(Whitelist, Values) {
    EXPECT_TRUE(potts_value_allowed(-kI, 1.0, 1e-3));
    EXPECT_FALSE(potts_value_allowed(kI, 1.0, 1e-3));
    EXPECT_TRUE(lgt_value_allowed(std::polar(1.0, 0.7), 1e-3));
    EXPECT_FALSE(lgt_value_allowed(0.3, 1e-3));
    EXPECT_TRUE(ising_value_allowed(kI));
    EXPECT_FALSE(ising_value_allowed(1.0));
}

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

#include "latcirc/spinlat.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <map>

#include "generators.h"
#include "oracles.h"

using namespace latcirc;

namespace {

EdgeModel single_edge(cplx eJ) {
    EdgeModel em = EdgeModel::on_graph(PlanarCircuitGraph(1, 2), 2);
    em.h(0, 0) = ising_table(eJ);
    em.boundary = Boundary::open();
    return em;
}

LgtModel single_face(cplx eJ) {
    LgtModel lm;
    lm.X = lm.Y = lm.Z = 1;
    for (int x = 0; x <= 1; x++) {
        for (int y = 0; y <= 1; y++) {
            lm.gauge_fixed[LgtEdge{x, y, 0, LgtDir::T}] = 0;
        }
    }
    lm.set_face(LgtFace{0, 0, 0, LgtPlane::XY}, eJ);
    lm.boundary = Boundary::open();
    return lm;
}

}  // namespace

TEST(BruteForce, SingleIsingEdge) {
    PartitionValue z = brute_force_partition(single_edge(2.0));
    EXPECT_LT(std::abs(z.Z - 6.0), 1e-15);
    EXPECT_EQ(z.provenance, "oracle");
    EXPECT_LT(std::abs(z.kappa.value() - 1.0), 1e-15);
}

TEST(BruteForce, SixVertexSingleVertex) {
    VertexModel vm = VertexModel::tilted_grid(1, 1, 2);
    double r = 1.0 / std::sqrt(2.0);
    auto &w = vm.vertices[0].w;
    std::fill(w.begin(), w.end(), 0.0);
    auto set = [&](int i, int j, int k, int l, cplx v) { w[static_cast<size_t>(((i * 2 + j) * 2 + k) * 2 + l)] = v; };
    set(0, 0, 0, 0, 1.0);
    set(1, 1, 1, 1, 1.0);
    set(0, 1, 0, 1, r);
    set(1, 0, 1, 0, r);
    set(0, 1, 1, 0, r);
    set(1, 0, 0, 1, -r);
    vm.boundary = Boundary::fixed({0, 1}, {0, 1});
    EXPECT_LT(std::abs(brute_force_partition(vm).Z - r), 1e-15);
}

TEST(BruteForce, IsingTwoByTwoMatchesHandSum) {
    EdgeModel em = EdgeModel::on_graph(PlanarCircuitGraph(2, 2), 2);
    cplx eh = std::polar(1.0, kPi / 4);
    for (int r = 0; r < 2; r++) {
        em.h(r, 0) = ising_table(kI);
        for (int c = 0; c < 2; c++) {
            em.f(r, c) = ising_field(eh);
        }
    }
    em.v(0, 0) = ising_table(kI);
    em.v(0, 1) = ising_table(kI);
    em.boundary = Boundary::open();
    // 16-term expansion: spins a b on row 0, c d on row 1.
    cplx hand = 0.0;
    for (int s = 0; s < 16; s++) {
        int a = s >> 3 & 1, b = s >> 2 & 1, c = s >> 1 & 1, d = s & 1;
        auto J = [&](int x, int y) { return x == y ? kI : cplx(1.0); };
        auto h = [&](int x) { return x == 0 ? eh : cplx(1.0); };
        hand += J(a, b) * J(c, d) * J(a, c) * J(b, d) * h(a) * h(b) * h(c) * h(d);
    }
    EXPECT_LT(std::abs(brute_force_partition(em).Z - hand), 1e-12);
}

TEST(BruteForce, CapAndInvalidConfig) {
    EdgeModel em = EdgeModel::on_graph(PlanarCircuitGraph(5, 5), 2);
    for (int r = 0; r < 5; r++) {
        for (int c = 0; c < 5; c++) {
            em.f(r, c) = ising_field(2.0);
        }
    }
    em.boundary = Boundary::open();
    EXPECT_THROW(brute_force_partition(em), Error);
    EXPECT_NO_THROW(brute_force_partition(em, EnumerationOptions{25}));
    try {
        brute_force_partition(em);
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::EnumerationTooLarge);
    }
    EdgeModel bad = single_edge(2.0);
    bad.boundary = Boundary::fixed({0}, {2});
    try {
        brute_force_partition(bad);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidConfig);
    }
}

TEST(BruteForce, MatchesIndependentOracleAcrossFamilies) {
    gen::Rng rng(11);
    for (auto kind : {BoundaryKind::Fixed, BoundaryKind::Open, BoundaryKind::Periodic}) {
        for (int t = 0; t < 4; t++) {
            VertexModel vm = gen::random_vertex(rng, 2, 2, kind, t % 2 == 0);
            EXPECT_LT(std::abs(brute_force_partition(vm).Z - oracle::vertex_Z(vm)), 1e-10);
            EdgeModel ising = gen::random_ising(rng, 3, 3, kind);
            EXPECT_LT(std::abs(brute_force_partition(ising).Z - oracle::edge_Z(ising)), 1e-10);
            EdgeModel potts = gen::random_potts(rng, 2, 3, kind);
            EXPECT_LT(std::abs(brute_force_partition(potts).Z - oracle::edge_Z(potts)), 1e-10);
            LgtModel lgt = gen::random_lgt(rng, 1, 1, 2, kind);
            EXPECT_LT(std::abs(brute_force_partition(lgt).Z - oracle::lgt_Z(lgt)), 1e-10);
        }
    }
}

TEST(BruteForce, IndependentOfWorkerCount) {
    gen::Rng rng(12);
    EdgeModel em = gen::random_ising(rng, 4, 4, BoundaryKind::Open);
    setenv("LATCIRC_THREADS", "1", 1);
    cplx a = brute_force_partition(em).Z;
    setenv("LATCIRC_THREADS", "4", 1);
    cplx b = brute_force_partition(em).Z;
    unsetenv("LATCIRC_THREADS");
    EXPECT_EQ(a, b);
}

TEST(EnumerateConfigs, SingleFreeSpin) {
    EdgeModel em = EdgeModel::on_graph(PlanarCircuitGraph(1, 1), 2);
    std::vector<std::pair<std::vector<int>, cplx>> seen;
    enumerate_configs(em, [&](std::span<const int> c, cplx w) { seen.push_back({{c.begin(), c.end()}, w}); });
    ASSERT_EQ(seen.size(), 2u);
    EXPECT_EQ(seen[0].first, std::vector<int>{0});
    EXPECT_EQ(seen[1].first, std::vector<int>{1});
    EXPECT_EQ(seen[0].second, cplx(1.0));
    EXPECT_EQ(seen[1].second, cplx(1.0));
}

TEST(EnumerateConfigs, SingleEdgeWeights) {
    std::vector<cplx> w;
    enumerate_configs(single_edge(2.0), [&](std::span<const int>, cplx x) { w.push_back(x); });
    EXPECT_EQ(w, (std::vector<cplx>{2.0, 1.0, 1.0, 2.0}));
}

TEST(EnumerateConfigs, SingleFaceParityCount) {
    LgtModel lm = single_face(kI);
    // Free spins are the eight spatial edges; the first four (slice 0)
    // bound the face.
    std::map<std::vector<int>, cplx> by_face;
    int even = 0, odd = 0;
    enumerate_configs(lm, [&](std::span<const int> c, cplx w) {
        std::vector<int> face(c.begin(), c.begin() + 4);
        int parity = (face[0] + face[1] + face[2] + face[3]) % 2;
        EXPECT_EQ(w, parity == 0 ? kI : cplx(1.0));
        by_face[face] = w;
    });
    for (auto &[k, w] : by_face) {
        (w == kI ? even : odd)++;
    }
    EXPECT_EQ(even, 8);
    EXPECT_EQ(odd, 8);
}

TEST(EnumerateConfigs, SumEqualsBruteForce) {
    gen::Rng rng(13);
    for (int t = 0; t < 6; t++) {
        std::vector<LatticeModel> models = {gen::random_vertex(rng, 2, 2, BoundaryKind::Open, false),
                                            gen::random_ising(rng, 3, 3, BoundaryKind::Fixed),
                                            gen::random_potts(rng, 2, 3, BoundaryKind::Periodic),
                                            gen::random_lgt(rng, 1, 1, 1, BoundaryKind::Open)};
        for (const auto &m : models) {
            cplx sum = 0.0;
            enumerate_configs(m, [&](std::span<const int>, cplx w) { sum += w; });
            EXPECT_LT(std::abs(sum - brute_force_partition(m).Z), 1e-12);
        }
    }
}

TEST(GaugeFixing, PlaquetteLoopIsReported) {
    LgtModel lm;
    lm.X = lm.Y = lm.Z = 1;
    for (auto e : {LgtEdge{0, 0, 0, LgtDir::X}, LgtEdge{0, 1, 0, LgtDir::X}, LgtEdge{0, 0, 0, LgtDir::Y},
                   LgtEdge{1, 0, 0, LgtDir::Y}}) {
        lm.gauge_fixed[e] = 0;
    }
    GaugeCheck gc = validate_gauge_fixing(lm);
    EXPECT_FALSE(gc.ok);
    EXPECT_EQ(gc.cycle.size(), 4u);
}

TEST(GaugeFixing, TemporalGaugeIsAcyclic) {
    LgtModel lm;
    lm.X = lm.Y = lm.Z = 2;
    for (int z = 0; z < 2; z++) {
        for (int y = 0; y <= 2; y++) {
            for (int x = 0; x <= 2; x++) {
                lm.gauge_fixed[LgtEdge{x, y, z, LgtDir::T}] = 0;
            }
        }
    }
    EXPECT_TRUE(validate_gauge_fixing(lm).ok);
    // A periodic time direction closes every chain.
    lm.boundary = Boundary::periodic();
    EXPECT_FALSE(validate_gauge_fixing(lm).ok);
}

TEST(Invariants, GaugeFlipLeavesWeightsUnchanged) {
    gen::Rng rng(14);
    LgtModel lm;
    lm.X = lm.Y = lm.Z = 1;
    lm.boundary = Boundary::open();
    for (int z = 0; z <= 1; z++) {
        for (LgtPlane p : {LgtPlane::XY, LgtPlane::XT, LgtPlane::YT}) {
            for (int y = 0; y <= 1; y++) {
                for (int x = 0; x <= 1; x++) {
                    if (lm.face_valid(LgtFace{x, y, z, p})) {
                        lm.set_face(LgtFace{x, y, z, p}, gen::weight(rng), gen::weight(rng));
                    }
                }
            }
        }
    }
    std::vector<LgtEdge> edges = lm.all_edges();
    std::map<std::vector<int>, cplx> weight;
    enumerate_configs(lm, [&](std::span<const int> c, cplx w) { weight[{c.begin(), c.end()}] = w; });
    for (int trial = 0; trial < 5; trial++) {
        int vx = gen::uniform_int(rng, 0, 1), vy = gen::uniform_int(rng, 0, 1), vz = gen::uniform_int(rng, 0, 1);
        std::vector<size_t> incident;
        for (size_t i = 0; i < edges.size(); i++) {
            const LgtEdge &e = edges[i];
            int ex = e.x + (e.dir == LgtDir::X), ey = e.y + (e.dir == LgtDir::Y), ez = e.z + (e.dir == LgtDir::T);
            if ((e.x == vx && e.y == vy && e.z == vz) || (ex == vx && ey == vy && ez == vz)) {
                incident.push_back(i);
            }
        }
        for (auto &[cfg, w] : weight) {
            std::vector<int> flipped = cfg;
            for (size_t i : incident) {
                flipped[i] ^= 1;
            }
            EXPECT_LT(std::abs(weight.at(flipped) - w), 1e-14);
        }
    }
}

TEST(Invariants, PottsEnergyShiftScalesByEdgeCount) {
    gen::Rng rng(15);
    for (int t = 0; t < 5; t++) {
        EdgeModel em = gen::random_potts(rng, 2, 3, BoundaryKind::Open);
        em.pins.clear();
        cplx c = gen::weight(rng);
        EdgeModel shifted = em;
        for (auto &m : shifted.horizontal) {
            m *= c;
        }
        for (auto &m : shifted.vertical) {
            m *= c;
        }
        int edges = em.graph.tau() + em.graph.num_vertical();
        cplx expect = brute_force_partition(em).Z * std::pow(c, edges);
        EXPECT_LT(std::abs(brute_force_partition(shifted).Z - expect), 1e-10 * std::abs(expect));
    }
}

TEST(Invariants, InertFaceChangesNothing) {
    gen::Rng rng(16);
    LgtModel lm = gen::random_lgt(rng, 1, 1, 2, BoundaryKind::Fixed);
    cplx before = brute_force_partition(lm).Z;
    LgtFace f{0, 0, 1, LgtPlane::XY};
    lm.faces.erase(f);
    cplx absent = brute_force_partition(lm).Z;
    lm.set_face(f, 1.0);
    EXPECT_EQ(brute_force_partition(lm).Z, absent);
    (void)before;
}

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

#include "generators.h"

#include <algorithm>
#include <cmath>

namespace gen {

using namespace latcirc;

double uniform(Rng &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(Rng &rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

cplx phase(Rng &rng) {
    return std::polar(1.0, uniform(rng, 0, 2 * kPi));
}

cplx weight(Rng &rng) {
    return uniform(rng, 0.5, 1.5) * phase(rng);
}

Mat random_unitary(Rng &rng, int dim) {
    std::normal_distribution<double> nd;
    Mat a(dim, dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            a(i, j) = cplx(nd(rng), nd(rng));
        }
    }
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR();
    for (int i = 0; i < dim; i++) {
        cplx d = r(i, i);
        q.col(i) *= std::abs(d) > 0 ? d / std::abs(d) : cplx(1.0);
    }
    return q;
}

Vec random_state(Rng &rng, int dim) {
    std::normal_distribution<double> nd;
    Vec v(dim);
    for (int i = 0; i < dim; i++) {
        v(i) = cplx(nd(rng), nd(rng));
    }
    return v / v.norm();
}

std::vector<int> random_spins(Rng &rng, int count, int q) {
    std::vector<int> s(static_cast<size_t>(count));
    for (int &x : s) {
        x = uniform_int(rng, 0, q - 1);
    }
    return s;
}

Boundary random_boundary(Rng &rng, BoundaryKind kind, int size, int q) {
    if (kind == BoundaryKind::Fixed) {
        return Boundary::fixed(random_spins(rng, size, q), random_spins(rng, size, q));
    }
    return kind == BoundaryKind::Open ? Boundary::open() : Boundary::periodic();
}

VertexModel random_vertex(Rng &rng, int n, int m, BoundaryKind kind, bool six_vertex) {
    VertexModel vm = VertexModel::tilted_grid(n, m, 2);
    for (auto &v : vm.vertices) {
        for (int i = 0; i < 2; i++) {
            for (int j = 0; j < 2; j++) {
                for (int k = 0; k < 2; k++) {
                    for (int l = 0; l < 2; l++) {
                        bool allowed = !six_vertex || i + j == k + l;
                        v.w[static_cast<size_t>(((i * 2 + j) * 2 + k) * 2 + l)] = allowed ? weight(rng) : cplx(0.0);
                    }
                }
            }
        }
    }
    vm.boundary = random_boundary(rng, kind, vm.width, 2);
    if (six_vertex && kind == BoundaryKind::Fixed) {
        // Charge conservation makes most random boundaries vanish; use a
        // permutation of the right boundary on the left.
        std::vector<int> left = vm.boundary.right;
        std::shuffle(left.begin(), left.end(), rng);
        vm.boundary.left = left;
    }
    return vm;
}

PlanarCircuitGraph random_graph(Rng &rng, int n, int m) {
    PlanarCircuitGraph g(n, m);
    for (int r = 0; r + 1 < n; r++) {
        for (int c = 0; c < m; c++) {
            if (uniform(rng) < 0.3) {
                g.deleted_vertical.insert({r, c});
            }
        }
    }
    for (int r = 0; r < n; r++) {
        for (int c = 0; c + 1 < m; c++) {
            if (uniform(rng) < 0.3) {
                g.contracted_horizontal.insert({r, c});
            }
        }
    }
    return g;
}

EdgeModel random_ising(Rng &rng, int n, int m, BoundaryKind kind) {
    EdgeModel em = EdgeModel::on_graph(random_graph(rng, n, m), 2);
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < m; c++) {
            em.h(r, c) = ising_table(weight(rng));
            em.v(r, c) = ising_table(weight(rng));
            em.f(r, c) = ising_field(weight(rng));
        }
    }
    em.boundary = random_boundary(rng, kind, n, 2);
    return em;
}

EdgeModel random_potts(Rng &rng, int n, int m, BoundaryKind kind) {
    EdgeModel em = EdgeModel::on_graph(random_graph(rng, n, m), 3);
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < m; c++) {
            em.h(r, c) = potts_table(3, weight(rng), weight(rng));
            em.v(r, c) = potts_table(3, weight(rng), weight(rng));
            if (uniform(rng) < 0.3) {
                em.pins.push_back(Pin{r, c, uniform_int(rng, 0, 2), potts_table(3, weight(rng), weight(rng)), ""});
            }
        }
    }
    em.boundary = random_boundary(rng, kind, n, 3);
    return em;
}

LgtModel random_lgt(Rng &rng, int X, int Y, int Z, BoundaryKind kind) {
    LgtModel lm;
    lm.X = X;
    lm.Y = Y;
    lm.Z = Z;
    lm.boundary = random_boundary(rng, kind, lm.num_lines(), 2);
    // A periodic time direction closes each temporal chain, so the last
    // temporal layer stays free and its faces inert.
    bool periodic = kind == BoundaryKind::Periodic;
    int fixed_layers = periodic ? Z - 1 : Z;
    for (int z = 0; z < fixed_layers; z++) {
        for (int y = 0; y <= Y; y++) {
            for (int x = 0; x <= X; x++) {
                lm.gauge_fixed[LgtEdge{x, y, z, LgtDir::T}] = uniform_int(rng, 0, 1);
            }
        }
    }
    for (int z = 0; z <= Z; z++) {
        for (int y = 0; y <= Y; y++) {
            for (int x = 0; x <= X; x++) {
                for (LgtPlane p : {LgtPlane::XY, LgtPlane::XT, LgtPlane::YT}) {
                    LgtFace f{x, y, z, p};
                    bool temporal = p != LgtPlane::XY;
                    if (periodic && temporal && z == Z - 1) {
                        continue;
                    }
                    if (lm.face_valid(f) && uniform(rng) < 0.8) {
                        lm.set_face(f, weight(rng), uniform(rng) < 0.3 ? weight(rng) : cplx(1.0));
                    }
                }
            }
        }
    }
    if (uniform(rng) < 0.5) {
        int slices = lm.num_slices();
        LgtEdge e = lm.line_edge(uniform_int(rng, 0, lm.num_lines() - 1), uniform_int(rng, 0, slices - 1));
        lm.gauge_fixed[e] = uniform_int(rng, 0, 1);
    }
    return lm;
}

latcirc::LogicalCircuit random_logical(Rng &rng, latcirc::CompileTarget t, int width, int gates, int max_h) {
    using latcirc::CompileTarget;
    using latcirc::LogicalGate;
    latcirc::LogicalCircuit c;
    c.width = width;
    std::vector<int> blocks(static_cast<size_t>(width), 0);
    int hs = 0;
    for (int i = 0; i < gates; i++) {
        int w = uniform_int(rng, 0, width - 1);
        bool pair = width > 1 && uniform_int(rng, 0, 1) == 1;
        int p = std::min(w, width - 2);
        switch (t) {
            case CompileTarget::Ising:
            case CompileTarget::Dqc1:
                c.gates.push_back(pair ? LogicalGate{"TWvT", {p, p + 1}, {}, {}} : LogicalGate{"T", {w}, {}, {}});
                break;
            case CompileTarget::SixVertex: {
                int a = uniform_int(rng, 0, width - 2);
                if (uniform_int(rng, 0, 2) == 0) {
                    c.gates.push_back(LogicalGate{"V", {a, a + 1}, {}, {}});
                } else {
                    c.gates.push_back(LogicalGate{"U", {a, a + 1}, {uniform(rng, -3.0, 3.0)}, {}});
                }
                break;
            }
            case CompileTarget::Potts: {
                static const char *one[] = {"I1", "P", "H"};
                static const char *two[] = {"I2", "CZ"};
                if (pair) {
                    c.gates.push_back(LogicalGate{two[uniform_int(rng, 0, 1)], {p, p + 1}, {}, {}});
                } else {
                    c.gates.push_back(LogicalGate{one[uniform_int(rng, 0, 2)], {w}, {}, {}});
                }
                break;
            }
            case CompileTarget::Lgt: {
                auto &bw = blocks[static_cast<size_t>(w)];
                int kind = uniform_int(rng, 0, 2);
                if (kind == 2 && pair && (blocks[static_cast<size_t>(p)] - blocks[static_cast<size_t>(p + 1)]) % 2 == 0) {
                    int top = std::max(blocks[static_cast<size_t>(p)], blocks[static_cast<size_t>(p + 1)]);
                    if (max_h >= 0 && hs + 2 * top - blocks[static_cast<size_t>(p)] - blocks[static_cast<size_t>(p + 1)] > max_h) {
                        c.gates.push_back(LogicalGate{"Rz", {w}, {uniform(rng, 0.0, 6.283185307179586)}, {}});
                        break;
                    }
                    hs += 2 * top - blocks[static_cast<size_t>(p)] - blocks[static_cast<size_t>(p + 1)];
                    blocks[static_cast<size_t>(p)] = blocks[static_cast<size_t>(p + 1)] = top;
                    c.gates.push_back(LogicalGate{"diag", {p, p + 1}, {}, {}});
                } else if (kind == 1 && (max_h < 0 || hs < max_h)) {
                    bw++;
                    hs++;
                    c.gates.push_back(LogicalGate{"H", {w}, {}, {}});
                } else {
                    c.gates.push_back(LogicalGate{"Rz", {w}, {uniform(rng, 0.0, 6.283185307179586)}, {}});
                }
                break;
            }
        }
    }
    return c;
}

}  // namespace gen

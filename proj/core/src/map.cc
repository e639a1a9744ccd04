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

#include "latcirc/map.h"

#include <algorithm>
#include <map>
#include <sstream>

namespace latcirc {

namespace {

std::string at(const char *what, int a, int b) {
    std::ostringstream out;
    out << what << "@(" << a << "," << b << ")";
    return out.str();
}

void set_states(MappedCircuit &mc, const Boundary &b, int q, int width) {
    mc.mode = b.kind;
    if (b.kind == BoundaryKind::Fixed) {
        mc.left = ProductState::basis(q, b.left);
        mc.right = ProductState::basis(q, b.right);
    } else if (b.kind == BoundaryKind::Open) {
        mc.left = ProductState::uniform(q, width);
        mc.right = ProductState::uniform(q, width);
        mc.kappa *= Kappa::q_power(q, width);
    }
}

Mat diag_mat(const std::vector<cplx> &d) {
    Mat m = Mat::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    for (size_t i = 0; i < d.size(); i++) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
    }
    return m;
}

bool is_identity(const Mat &m) {
    return m == Mat::Identity(m.rows(), m.cols());
}

}  // namespace

cplx evaluate(const MappedCircuit &mc) {
    if (mc.mode == BoundaryKind::Periodic) {
        return mc.kappa.value() * trace(mc.circuit);
    }
    return mc.kappa.value() * matrix_element(mc.circuit, mc.left, mc.right);
}

MappedCircuit vertex_to_circuit(const VertexModel &model) {
    model.validate();
    int q = model.q;
    MappedCircuit mc;
    mc.circuit = Circuit(model.width, q);
    int idx = 0;
    for (const auto &v : model.vertices) {
        Mat w(q * q, q * q);
        for (int i = 0; i < q; i++) {
            for (int j = 0; j < q; j++) {
                for (int k = 0; k < q; k++) {
                    for (int l = 0; l < q; l++) {
                        w(i * q + j, k * q + l) = v.at(q, i, j, k, l);
                    }
                }
            }
        }
        mc.circuit.add(w, {v.line, v.line + 1}, at("W^a", idx++, v.line));
    }
    set_states(mc, model.boundary, q, model.width);
    return mc;
}

MappedCircuit edge_to_circuit(const EdgeModel &model) {
    model.validate();
    const PlanarCircuitGraph &g = model.graph;
    int q = model.q;
    MappedCircuit mc;
    mc.circuit = Circuit(g.n, q);
    auto runs = g.runs();

    // Columns are processed from the right boundary leftwards.
    for (int c = g.m - 1; c >= 0; c--) {
        if (c + 1 < g.m) {
            for (int r = 0; r < g.n; r++) {
                if (g.has_horizontal(r, c)) {
                    mc.circuit.add(model.h(r, c).transpose(), {r}, at("W_e^h", r, c));
                }
            }
        }
        for (const Pin &p : model.pins) {
            if (p.col == c) {
                std::vector<cplx> d(static_cast<size_t>(q));
                for (int s = 0; s < q; s++) {
                    d[static_cast<size_t>(s)] = p.table(p.value, s);
                }
                mc.circuit.add(diag_mat(d), {p.row}, p.label.empty() ? at("pin", p.row, c) : p.label);
            }
        }
        for (int r = 0; r + 1 < g.n; r++) {
            if (g.has_vertical(r, c)) {
                std::vector<cplx> d(static_cast<size_t>(q * q));
                for (int a = 0; a < q; a++) {
                    for (int b = 0; b < q; b++) {
                        d[static_cast<size_t>(a * q + b)] = model.v(r, c)(a, b);
                    }
                }
                mc.circuit.add(diag_mat(d), {r, r + 1}, at("W_e^v", r, c));
            }
        }
        for (const auto &run : runs) {
            if (run.first_col != c) {
                continue;
            }
            Vec f = Vec::Ones(q);
            for (int cc = run.first_col; cc <= run.last_col; cc++) {
                f = f.cwiseProduct(model.f(run.row, cc));
            }
            if (f != Vec::Ones(q)) {
                mc.circuit.add(diag_mat(std::vector<cplx>(f.data(), f.data() + q)), {run.row}, at("W_i", run.row, c));
            }
        }
    }
    set_states(mc, model.boundary, q, g.n);
    return mc;
}

MappedCircuit lgt_to_circuit(const LgtModel &model, LgtMapOptions opt) {
    model.validate();
    GaugeCheck gc = validate_gauge_fixing(model);
    if (!gc.ok) {
        throw Error(ErrorKind::GaugeLoop, "gauge-fixed edges contain a cycle of length " + std::to_string(gc.cycle.size()));
    }
    const int L = model.num_lines();
    const int S = model.num_slices();
    const bool periodic = model.periodic();
    const bool fixed_bc = model.boundary.kind == BoundaryKind::Fixed;

    auto gauge = [&](const LgtEdge &e) {
        auto it = model.gauge_fixed.find(model.canonical(e));
        return it == model.gauge_fixed.end() ? -1 : it->second;
    };
    auto coupling = [&](const LgtFace &f) -> const LgtModel::Coupling * {
        auto it = model.faces.find(f);
        if (it == model.faces.end() || (it->second.even == cplx(1.0) && it->second.odd == cplx(1.0))) {
            return nullptr;
        }
        return &it->second;
    };

    Kappa kappa;
    // Free temporal edges may only touch inert faces; each one is summed.
    for (int z = 0; z < model.Z; z++) {
        for (int y = 0; y <= model.Y; y++) {
            for (int x = 0; x <= model.X; x++) {
                LgtEdge t{x, y, z, LgtDir::T};
                if (gauge(t) >= 0) {
                    continue;
                }
                std::vector<LgtFace> touching = {{x, y, z, LgtPlane::XT}, {x - 1, y, z, LgtPlane::XT},
                                                 {x, y, z, LgtPlane::YT}, {x, y - 1, z, LgtPlane::YT}};
                for (const LgtFace &f : touching) {
                    if (model.face_valid(f) && coupling(f)) {
                        throw Error(ErrorKind::UnsupportedFace, "temporal face with a free temporal edge at (" +
                                                                    std::to_string(x) + "," + std::to_string(y) + "," +
                                                                    std::to_string(z) + ") has J != 0");
                    }
                }
                kappa *= Kappa::pow2_halves(2);
            }
        }
    }

    std::vector<Gate> ops;
    cplx residual = 1.0;

    auto temporal_face_of_line = [&](int line, int z) {
        LgtEdge e = model.line_edge(line, z);
        return e.dir == LgtDir::X ? LgtFace{e.x, e.y, z, LgtPlane::XT} : LgtFace{e.x, e.y, z, LgtPlane::YT};
    };

    // known[l] >= 0 while line l is in a basis state; diagonal gates on such
    // lines fold into scalars and face parities.
    std::vector<int> known(static_cast<size_t>(L), -1);
    if (fixed_bc) {
        for (int l = 0; l < L; l++) {
            known[static_cast<size_t>(l)] = model.boundary.right[static_cast<size_t>(l)];
        }
    }
    for (int z = 0; z < S; z++) {
        for (int l = 0; l < L; l++) {
            int v = gauge(model.line_edge(l, z));
            int &kv = known[static_cast<size_t>(l)];
            if (v < 0) {
                continue;
            }
            if (kv >= 0) {
                if (kv != v) {
                    residual = 0.0;
                }
                continue;
            }
            Mat p = Mat::Zero(2, 2);
            p(v, v) = 1.0;
            ops.push_back(Gate{p, {l}, "gauge@" + std::to_string(l) + "," + std::to_string(z)});
            kv = v;
        }
        const bool last = fixed_bc && !periodic && z == model.Z;
        auto spatial_value = [&](int line) {
            int kv = known[static_cast<size_t>(line)];
            if (last) {
                int lv = model.boundary.left[static_cast<size_t>(line)];
                if (kv >= 0 && kv != lv) {
                    residual = 0.0;
                }
                return lv;
            }
            return kv;
        };
        for (int y = 0; y < model.Y; y++) {
            for (int x = 0; x < model.X; x++) {
                LgtFace f{x, y, z, LgtPlane::XY};
                const auto *c = coupling(f);
                if (!c) {
                    continue;
                }
                std::vector<int> free_lines;
                int fixed_parity = 0;
                for (const LgtEdge &e : model.face_edges(f)) {
                    int line = model.line_of(e);
                    int v = spatial_value(line);
                    if (v >= 0) {
                        fixed_parity ^= v;
                    } else {
                        free_lines.push_back(line);
                    }
                }
                size_t k = free_lines.size();
                std::vector<cplx> d(size_t{1} << k);
                for (size_t s = 0; s < d.size(); s++) {
                    int parity = (__builtin_popcount(static_cast<unsigned>(s)) + fixed_parity) % 2;
                    d[s] = parity == 0 ? c->even : c->odd;
                }
                std::string label = c->label.empty() ? "W_f^s@" + std::to_string(x) + "," + std::to_string(y) + "," +
                                                           std::to_string(z)
                                                     : c->label;
                if (k == 0) {
                    residual *= d[0];
                } else {
                    ops.push_back(Gate{diag_mat(d), free_lines, label});
                }
            }
        }
        bool has_step = periodic || z + 1 < S;
        if (!has_step) {
            continue;
        }
        for (int l = 0; l < L; l++) {
            LgtFace f = temporal_face_of_line(l, z);
            const auto *c = coupling(f);
            Mat m = Mat::Ones(2, 2);
            if (c) {
                auto edges = model.face_edges(f);
                int tpar = gauge(edges[2]) ^ gauge(edges[3]);
                for (int sp = 0; sp < 2; sp++) {
                    for (int s = 0; s < 2; s++) {
                        m(sp, s) = ((s + sp + tpar) % 2 == 0) ? c->even : c->odd;
                    }
                }
            }
            if (is_identity(m)) {
                continue;
            }
            int &kv = known[static_cast<size_t>(l)];
            if (kv >= 0 && m(1 - kv, kv) == cplx(0.0)) {
                residual *= m(kv, kv);
                continue;
            }
            kv = -1;
            {
                std::string label = c && !c->label.empty() ? c->label
                                                           : "W_f^t@" + std::to_string(l) + "," + std::to_string(z);
                ops.push_back(Gate{m, {l}, label});
            }
        }
    }

    std::vector<bool> coupled(static_cast<size_t>(L), !opt.contract_decoupled);
    for (const Gate &g : ops) {
        if (g.targets.size() > 1) {
            for (int t : g.targets) {
                coupled[static_cast<size_t>(t)] = true;
            }
        }
    }
    std::vector<int> remap(static_cast<size_t>(L), -1);
    int width = 0;
    for (int l = 0; l < L; l++) {
        if (coupled[static_cast<size_t>(l)]) {
            remap[static_cast<size_t>(l)] = width++;
        }
    }
    // Contract each decoupled line into a scalar.
    std::vector<Mat> line_op(static_cast<size_t>(L), Mat::Identity(2, 2));
    MappedCircuit mc;
    mc.circuit = Circuit(width, 2);
    for (const Gate &g : ops) {
        if (g.targets.size() == 1 && !coupled[static_cast<size_t>(g.targets[0])]) {
            line_op[static_cast<size_t>(g.targets[0])] = g.matrix * line_op[static_cast<size_t>(g.targets[0])];
            continue;
        }
        std::vector<int> t;
        for (int x : g.targets) {
            t.push_back(remap[static_cast<size_t>(x)]);
        }
        mc.circuit.add(Gate{g.matrix, t, g.label});
    }
    std::vector<int> left, right;
    for (int l = 0; l < L; l++) {
        const Mat &op = line_op[static_cast<size_t>(l)];
        if (coupled[static_cast<size_t>(l)]) {
            if (fixed_bc) {
                left.push_back(model.boundary.left[static_cast<size_t>(l)]);
                right.push_back(model.boundary.right[static_cast<size_t>(l)]);
            }
            continue;
        }
        if (periodic) {
            residual *= op.trace();
        } else if (fixed_bc) {
            residual *= op(model.boundary.left[static_cast<size_t>(l)], model.boundary.right[static_cast<size_t>(l)]);
        } else {
            residual *= op.sum();
        }
    }
    kappa *= Kappa::scalar(residual);
    mc.kappa = kappa;
    Boundary b = model.boundary;
    if (fixed_bc) {
        b.left = left;
        b.right = right;
    }
    set_states(mc, b, 2, width);
    return mc;
}

MappedCircuit map_model(const LatticeModel &model) {
    switch (model.index()) {
        case 0: return vertex_to_circuit(std::get<VertexModel>(model));
        case 1: return edge_to_circuit(std::get<EdgeModel>(model));
        default: return lgt_to_circuit(std::get<LgtModel>(model));
    }
}

PartitionValue periodic_ising_trace(const EdgeModel &model) {
    if (model.boundary.kind != BoundaryKind::Periodic) {
        throw Error(ErrorKind::InvalidConfig, "periodic_ising_trace needs a periodic boundary");
    }
    MappedCircuit mc = edge_to_circuit(model);
    // Z is the plain trace; kappa carries the 2^{tau/2} that unitarizes each
    // horizontal gate at e^{beta J} = i.
    return PartitionValue{evaluate(mc), mc.kappa * Kappa::pow2_halves(model.graph.tau()), "circuit"};
}

}  // namespace latcirc

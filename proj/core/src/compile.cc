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

#include <algorithm>
#include <cmath>
#include <set>

#include "latcirc/encodings.h"
#include "latcirc/lgt_blocks.h"
#include "latcirc/map.h"

namespace latcirc {

namespace {

constexpr int kPottsMaxLogical = 6;
constexpr int kLgtBlockBudget = 256;
constexpr int kMappedCapQubits = 24;

Mat hadamard2() { return Mat{{1.0, 1.0}, {1.0, -1.0}} / std::sqrt(2.0); }

[[noreturn]] void unsupported(const LogicalGate &g, size_t idx, const std::string &why) {
    throw Error(ErrorKind::UnsupportedGate, "gate " + std::to_string(idx) + " (" + g.name + "): " + why);
}

void check_targets(const LogicalGate &g, size_t idx, int width, int arity) {
    if (static_cast<int>(g.targets.size()) != arity) {
        unsupported(g, idx, "expects " + std::to_string(arity) + " target(s)");
    }
    for (int t : g.targets) {
        if (t < 0 || t >= width) {
            unsupported(g, idx, "target " + std::to_string(t) + " outside width " + std::to_string(width));
        }
    }
    if (arity == 2 && g.targets[1] != g.targets[0] + 1) {
        unsupported(g, idx, "targets must be nearest neighbours (w, w+1)");
    }
}

std::vector<int> bits_or_zero(const std::vector<int> &bits, int n, const char *what) {
    if (bits.empty()) {
        return std::vector<int>(static_cast<size_t>(n), 0);
    }
    if (static_cast<int>(bits.size()) != n) {
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must list " + std::to_string(n) + " bits");
    }
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw Error(ErrorKind::InvalidConfig, std::string(what) + " entries must be 0 or 1");
        }
    }
    return bits;
}

// Columns counted in time order; grid column = m - 1 - time.
struct ColumnLayout {
    int rows = 0;
    std::vector<int> cur;
    struct HEdge {
        int row, time, gate;
        Mat table;
    };
    struct VEdge {
        int row, time, gate;
        Mat table;
    };
    struct PinAt {
        int row, time, gate, value;
        Mat table;
        std::string label;
    };
    std::vector<HEdge> h;
    std::vector<VEdge> v;
    std::vector<PinAt> pins;
    std::set<std::pair<int, int>> vused;

    explicit ColumnLayout(int n) : rows(n), cur(static_cast<size_t>(n), 0) {}

    void horizontal(int r, Mat table, int gate) {
        h.push_back(HEdge{r, cur[static_cast<size_t>(r)], gate, std::move(table)});
        cur[static_cast<size_t>(r)]++;
    }
    void vertical(int r, Mat table, int gate) {
        int t = std::max(cur[static_cast<size_t>(r)], cur[static_cast<size_t>(r + 1)]);
        while (vused.count({r, t})) {
            t++;
        }
        vused.insert({r, t});
        cur[static_cast<size_t>(r)] = cur[static_cast<size_t>(r + 1)] = t;
        v.push_back(VEdge{r, t, gate, std::move(table)});
    }
    void pin(int r, int value, Mat table, int gate, std::string label) {
        pins.push_back(PinAt{r, cur[static_cast<size_t>(r)], gate, value, std::move(table), std::move(label)});
    }
    int columns() const { return *std::max_element(cur.begin(), cur.end()) + 1; }

    EdgeModel emit(int q, std::vector<ProvenanceEntry> &prov) const {
        const int m = columns();
        PlanarCircuitGraph g(rows, m);
        for (int r = 0; r < rows; r++) {
            for (int c = 0; c + 1 < m; c++) {
                g.contracted_horizontal.insert({r, c});
            }
            for (int c = 0; c < m && r + 1 < rows; c++) {
                g.deleted_vertical.insert({r, c});
            }
        }
        for (const auto &e : h) {
            g.contracted_horizontal.erase({e.row, m - 2 - e.time});
        }
        for (const auto &e : v) {
            g.deleted_vertical.erase({e.row, m - 1 - e.time});
        }
        EdgeModel em = EdgeModel::on_graph(g, q);
        for (const auto &e : h) {
            int c = m - 2 - e.time;
            em.h(e.row, c) = e.table;
            prov.push_back(ProvenanceEntry{e.gate, "horizontal(" + std::to_string(e.row) + "," + std::to_string(c) + ")"});
        }
        for (const auto &e : v) {
            int c = m - 1 - e.time;
            em.v(e.row, c) = e.table;
            prov.push_back(ProvenanceEntry{e.gate, "vertical(" + std::to_string(e.row) + "," + std::to_string(c) + ")"});
        }
        for (const auto &p : pins) {
            int c = m - 1 - p.time;
            em.pins.push_back(Pin{p.row, c, p.value, p.table, p.label});
            prov.push_back(ProvenanceEntry{p.gate, "pin(" + std::to_string(p.row) + "," + std::to_string(c) + ")=" +
                                                       std::to_string(p.value)});
        }
        return em;
    }
};

CompiledInstance ising_common(const LogicalCircuit &c, bool periodic) {
    const int n = c.width;
    if (n < 1) {
        throw Error(ErrorKind::InvalidConfig, "circuit width must be positive");
    }
    const auto &gs = ising_gate_set();
    const cplx eJ = kI;
    ColumnLayout lay(n);
    Circuit ref(n, 2);
    for (int w = 0; w < n; w++) {
        ref.add(gs.V_half, {w}, "A");
    }
    for (size_t i = 0; i < c.gates.size(); i++) {
        const LogicalGate &g = c.gates[i];
        int gi = static_cast<int>(i);
        if (g.name == "T") {
            check_targets(g, i, n, 1);
            lay.horizontal(g.targets[0], ising_table(eJ), gi);
            ref.add(gs.T, g.targets, "T");
        } else if (g.name == "TWvT") {
            check_targets(g, i, n, 2);
            int w = g.targets[0];
            lay.horizontal(w, ising_table(eJ), gi);
            lay.horizontal(w + 1, ising_table(eJ), gi);
            lay.vertical(w, ising_table(eJ), gi);
            lay.horizontal(w, ising_table(eJ), gi);
            lay.horizontal(w + 1, ising_table(eJ), gi);
            ref.add(gs.T2_Wv_T2, g.targets, "TWvT");
        } else {
            unsupported(g, i, "not in the Ising alphabet {T, TWvT}");
        }
    }
    for (int w = 0; w < n; w++) {
        ref.add(gs.V_half, {w}, "A");
    }
    CompiledInstance ci;
    ci.target = periodic ? CompileTarget::Dqc1 : CompileTarget::Ising;
    EdgeModel em = lay.emit(2, ci.provenance);
    // Adjacent half powers of V merge, leaving one V per run.
    for (const auto &run : em.graph.runs()) {
        em.f(run.row, run.first_col) = ising_field(std::polar(1.0, kPi / 4));
    }
    const int tau = em.graph.tau();
    if (periodic) {
        em.boundary = Boundary::periodic();
        ci.kappa = Kappa::pow2_halves(tau);
        ci.trace = true;
        ci.target_description = "2^-n Tr(A U A), A = V^{1/2} on every wire";
    } else {
        em.boundary = Boundary::open();
        ci.kappa = Kappa::pow2_halves(tau + 2 * n);
        ci.target_description = "<+|^n A U A |+>^n, A = V^{1/2} on every wire";
    }
    ci.model = em;
    ci.reference = ref;
    ci.left = ProductState::uniform(2, n);
    ci.right = ProductState::uniform(2, n);
    ci.parameters["tau"] = tau;
    ci.parameters["n"] = n;
    return ci;
}

}  // namespace

const char *compile_target_name(CompileTarget t) {
    switch (t) {
        case CompileTarget::Ising: return "ising";
        case CompileTarget::SixVertex: return "sixvertex";
        case CompileTarget::Potts: return "potts";
        case CompileTarget::Lgt: return "lgt";
        case CompileTarget::Dqc1: return "dqc1";
    }
    return "?";
}

CompileTarget parse_compile_target(const std::string &s) {
    for (CompileTarget t : {CompileTarget::Ising, CompileTarget::SixVertex, CompileTarget::Potts, CompileTarget::Lgt,
                            CompileTarget::Dqc1}) {
        if (s == compile_target_name(t)) {
            return t;
        }
    }
    throw Error(ErrorKind::InvalidConfig, "unknown compile target '" + s + "'");
}

CompiledInstance compile_to_ising(const LogicalCircuit &c) { return ising_common(c, false); }

CompiledInstance dqc1_instance(const LogicalCircuit &c) { return ising_common(c, true); }

CompiledInstance compile_to_six_vertex(const LogicalCircuit &c, const CompileOptions &opt) {
    const int lines = c.width;
    if (lines < 2 || lines % 2 != 0) {
        throw Error(ErrorKind::InvalidConfig, "six-vertex circuits act on an even number (2n) of qubits");
    }
    const int n = lines / 2;
    struct Placed {
        int layer, line;
        Mat g;
        int gate;
    };
    std::vector<Placed> placed;
    std::vector<int> next(static_cast<size_t>(lines), 0);
    Circuit ref(lines, 2);
    for (size_t i = 0; i < c.gates.size(); i++) {
        const LogicalGate &g = c.gates[i];
        check_targets(g, i, lines, 2);
        Mat m;
        if (g.name == "U") {
            if (g.params.size() != 1) {
                unsupported(g, i, "U needs one parameter t");
            }
            m = six_vertex_gates(g.params[0]).U;
        } else if (g.name == "V") {
            m = six_vertex_gates(0.0).V;
        } else if (g.name == "matrix") {
            m = g.matrix;
            if (m.rows() != 4 || m.cols() != 4) {
                unsupported(g, i, "matrix gates must be 4x4");
            }
        } else {
            unsupported(g, i, "not in the six-vertex alphabet {U, V, matrix}");
        }
        if (!is_six_vertex_form(m, 0.0)) {
            throw Error(ErrorKind::NotSixVertexForm,
                        "gate " + std::to_string(i) + " (" + g.name + ") violates the six-vertex sparsity pattern");
        }
        int w = g.targets[0];
        int layer = std::max(next[static_cast<size_t>(w)], next[static_cast<size_t>(w + 1)]);
        if (layer % 2 != w % 2) {
            layer++;
        }
        next[static_cast<size_t>(w)] = next[static_cast<size_t>(w + 1)] = layer + 1;
        placed.push_back(Placed{layer, w, m, static_cast<int>(i)});
        ref.add(m, g.targets, g.name);
    }
    int layers = std::max(1, *std::max_element(next.begin(), next.end()));
    VertexModel vm = VertexModel::tilted_grid(n, layers, 2);
    CompiledInstance ci;
    ci.target = CompileTarget::SixVertex;
    // Vertex index of (layer, line) in the brick order.
    auto index_of_vertex = [&](int layer, int line) {
        int idx = 0;
        for (int l = 0; l < layer; l++) {
            idx += l % 2 == 0 ? n : n - 1;
        }
        return idx + line / 2;
    };
    std::vector<bool> used(vm.vertices.size(), false);
    for (const Placed &p : placed) {
        size_t idx = static_cast<size_t>(index_of_vertex(p.layer, p.line));
        auto &v = vm.vertices[idx];
        for (int a = 0; a < 4; a++) {
            for (int b = 0; b < 4; b++) {
                v.w[static_cast<size_t>(a * 4 + b)] = p.g(a, b);
            }
        }
        used[idx] = true;
        ci.provenance.push_back(ProvenanceEntry{p.gate, "vertex(layer " + std::to_string(p.layer) + ", lines " +
                                                            std::to_string(p.line) + "," + std::to_string(p.line + 1) +
                                                            ")"});
    }
    for (size_t idx = 0; idx < used.size(); idx++) {
        if (!used[idx]) {
            ci.provenance.push_back(ProvenanceEntry{-1, "vertex " + std::to_string(idx) + " = U(0) filler"});
        }
    }
    std::vector<int> stag(static_cast<size_t>(lines));
    for (int l = 0; l < lines; l++) {
        stag[static_cast<size_t>(l)] = l % 2;
    }
    std::vector<int> left = opt.left_bits.empty() ? stag : bits_or_zero(opt.left_bits, lines, "left boundary");
    std::vector<int> right = opt.right_bits.empty() ? stag : bits_or_zero(opt.right_bits, lines, "right boundary");
    vm.boundary = Boundary::fixed(left, right);
    ci.model = vm;
    ci.kappa = Kappa{};
    ci.reference = ref;
    ci.left = ProductState::basis(2, left);
    ci.right = ProductState::basis(2, right);
    ci.target_description = "<left|C|right> with staggered boundaries by default";
    ci.parameters["layers"] = layers;
    return ci;
}

CompiledInstance compile_to_potts(const LogicalCircuit &c, const CompileOptions &opt) {
    const int n = c.width;
    if (n < 1) {
        throw Error(ErrorKind::InvalidConfig, "circuit width must be positive");
    }
    if (n > kPottsMaxLogical) {
        throw Error(ErrorKind::WidthExceeded, std::to_string(n) + " logical qubits exceed the Potts cap of " +
                                                  std::to_string(kPottsMaxLogical));
    }
    std::vector<int> left = bits_or_zero(opt.left_bits, n, "left boundary");
    std::vector<int> right = bits_or_zero(opt.right_bits, n, "right boundary");
    ColumnLayout lay(2 * n);
    Circuit ref(n, 2);
    cplx norm = 1.0;
    int hadamards = 0;
    for (size_t i = 0; i < c.gates.size(); i++) {
        const LogicalGate &g = c.gates[i];
        GateRecipe r;
        if (g.name == "I1") {
            check_targets(g, i, n, 1);
            r = potts_I1();
        } else if (g.name == "P") {
            check_targets(g, i, n, 1);
            r = potts_P();
        } else if (g.name == "H") {
            check_targets(g, i, n, 1);
            r = potts_H(opt.epsilon);
            hadamards++;
        } else if (g.name == "I2") {
            check_targets(g, i, n, 2);
            r = potts_I2();
        } else if (g.name == "CZ") {
            check_targets(g, i, n, 2);
            r = potts_CZ();
        } else {
            unsupported(g, i, "not in the Potts alphabet {I1, P, H, I2, CZ}");
        }
        check_auxiliaries(r);
        const int base = 2 * g.targets[0];
        const int gi = static_cast<int>(i);
        for (const PhysOp &op : r.steps) {
            switch (op.kind) {
                case PhysKind::Horizontal: lay.horizontal(base + op.targets[0], potts_table(3, op.mu, op.nu), gi); break;
                case PhysKind::Pin:
                    lay.pin(base + op.targets[0], op.aux_value, potts_table(3, op.mu, op.nu), gi,
                            r.name + " step " + std::to_string(op.step));
                    break;
                case PhysKind::Vertical: {
                    int lo = base + std::min(op.targets[0], op.targets[1]);
                    lay.vertical(lo, potts_table(3, op.mu, op.nu), gi);
                    break;
                }
                default: throw Error(ErrorKind::InvalidConfig, r.name + ": non-Potts physical operation");
            }
        }
        norm *= r.normalization;
        ref.add(r.ideal, g.targets, g.name);
    }
    CompiledInstance ci;
    ci.target = CompileTarget::Potts;
    EdgeModel em = lay.emit(3, ci.provenance);
    std::vector<int> lrows, rrows;
    for (int w = 0; w < n; w++) {
        lrows.push_back(left[static_cast<size_t>(w)] ? 1 : 0);
        lrows.push_back(left[static_cast<size_t>(w)] ? 2 : 1);
        rrows.push_back(right[static_cast<size_t>(w)] ? 1 : 0);
        rrows.push_back(right[static_cast<size_t>(w)] ? 2 : 1);
    }
    em.boundary = Boundary::fixed(lrows, rrows);
    ci.model = em;
    ci.kappa = Kappa::scalar(norm);
    ci.reference = ref;
    ci.left = ProductState::basis(2, left);
    ci.right = ProductState::basis(2, right);
    ci.target_description = "<left_L|C|right_L> over |0>_L = |01>, |1>_L = |12>";
    // Measured H(eps) error is 1.4 eps^2 per gate; the budget doubles it.
    ci.approximation_bound = 3.0 * hadamards * opt.epsilon * opt.epsilon;
    ci.parameters["epsilon"] = opt.epsilon;
    ci.parameters["hadamards"] = hadamards;
    return ci;
}

CompiledInstance compile_to_lgt(const LogicalCircuit &c, const CompileOptions &opt) {
    const int n = c.width;
    if (n < 1) {
        throw Error(ErrorKind::InvalidConfig, "circuit width must be positive");
    }
    std::vector<int> left = bits_or_zero(opt.left_bits, n, "left boundary");
    std::vector<int> right = bits_or_zero(opt.right_bits, n, "right boundary");
    LgtCircuitBuilder b(n);
    Circuit ref(n, 2);
    int logical_h = 0;
    for (size_t i = 0; i < c.gates.size(); i++) {
        const LogicalGate &g = c.gates[i];
        const int gi = static_cast<int>(i);
        if (g.name == "Rz") {
            check_targets(g, i, n, 1);
            if (g.params.size() != 1) {
                unsupported(g, i, "Rz needs one angle");
            }
            b.rz(g.targets[0], g.params[0], gi);
            ref.add(rz(g.params[0]), g.targets, "Rz");
        } else if (g.name == "H") {
            check_targets(g, i, n, 1);
            b.hadamard(g.targets[0], gi);
            ref.add(hadamard2(), g.targets, "H");
            logical_h++;
        } else if (g.name == "diag") {
            check_targets(g, i, n, 2);
            b.diag(g.targets[0], gi);
            Mat d = Mat::Identity(4, 4);
            d(1, 1) = kI;
            d(2, 2) = kI;
            ref.add(d, g.targets, "diag");
        } else {
            unsupported(g, i, "not in the LGT alphabet {Rz, H, diag}");
        }
        if (b.blocks() > kLgtBlockBudget) {
            throw Error(ErrorKind::BlockBudget, "more than " + std::to_string(kLgtBlockBudget) + " Hadamard blocks");
        }
    }
    CompiledInstance ci;
    ci.target = CompileTarget::Lgt;
    LgtModel m = b.build(left, right, true);
    for (const auto &t : b.trace()) {
        ci.provenance.push_back(ProvenanceEntry{t.source, t.interaction});
    }
    ci.model = m;
    ci.kappa = Kappa::pow2_halves(b.blocks());
    ci.reference = ref;
    ci.left = ProductState::basis(2, left);
    ci.right = ProductState::basis(2, right);
    ci.target_description = "<left_L|C|right_L> over |0>_L = |0000>, |1>_L = |1111>";
    ci.parameters["blocks"] = b.blocks();
    ci.parameters["padding_blocks"] = b.blocks() - logical_h;
    ci.parameters["X"] = m.X;
    ci.parameters["Y"] = m.Y;
    ci.parameters["Z"] = m.Z;
    return ci;
}

CompiledInstance compile(CompileTarget t, const LogicalCircuit &c, const CompileOptions &opt) {
    switch (t) {
        case CompileTarget::Ising: return compile_to_ising(c);
        case CompileTarget::SixVertex: return compile_to_six_vertex(c, opt);
        case CompileTarget::Potts: return compile_to_potts(c, opt);
        case CompileTarget::Lgt: return compile_to_lgt(c, opt);
        case CompileTarget::Dqc1: return dqc1_instance(c);
    }
    throw Error(ErrorKind::InvalidConfig, "unknown compile target");
}

cplx source_value(const CompiledInstance &ci) {
    if (ci.trace) {
        return trace(ci.reference) / std::pow(2.0, ci.reference.width());
    }
    return matrix_element(ci.reference, ci.left, ci.right);
}

cplx normalized(const CompiledInstance &ci, cplx Z) {
    cplx v = Z / ci.kappa.value();
    if (ci.trace) {
        v /= std::pow(2.0, ci.reference.width());
    }
    return v;
}

RoundTrip round_trip(const CompiledInstance &ci, double tol, EnumerationOptions opt) {
    RoundTrip rt;
    rt.source = source_value(ci);
    MappedCircuit mc = map_model(ci.model);
    double qubits = mc.circuit.width() * std::log2(static_cast<double>(mc.circuit.q()));
    if (qubits > kMappedCapQubits) {
        rt.note = "mapped circuit too wide for statevector evaluation; structural checks only";
        return rt;
    }
    rt.mapped = normalized(ci, evaluate(mc));
    if (ci.target == CompileTarget::Lgt && opt.cap < 0) {
        // Hold faces prune every idle spin, so single-block lattices enumerate
        // quickly despite their spin count.
        if (ci.parameters.at("blocks") <= 1) {
            opt.cap = 1 << 20;
        }
    }
    try {
        rt.oracle = normalized(ci, brute_force_partition(ci.model, opt).Z);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::EnumerationTooLarge) {
            throw;
        }
        rt.note = "oracle skipped: " + std::string(e.what());
    }
    double scale = std::max(1.0, std::abs(rt.source));
    rt.error = std::abs(rt.mapped - rt.source);
    double lattice_gap = 0.0;
    if (rt.oracle) {
        rt.error = std::max(rt.error, std::abs(*rt.oracle - rt.source));
        lattice_gap = std::abs(*rt.oracle - rt.mapped);
    }
    rt.pass = rt.oracle.has_value() && lattice_gap < tol * scale && rt.error < tol * scale + ci.approximation_bound;
    return rt;
}

bool compiled_whitelisted(const CompiledInstance &ci) {
    auto potts_ok = [&](const Mat &t) {
        cplx mu = t(0, 0), nu = t(0, 1);
        return (t - potts_table(3, mu, nu)).norm() == 0.0 &&
               potts_value_allowed(mu, nu, ci.parameters.count("epsilon") ? ci.parameters.at("epsilon") : 1e-3);
    };
    switch (ci.target) {
        case CompileTarget::Ising:
        case CompileTarget::Dqc1: {
            const auto &em = std::get<EdgeModel>(ci.model);
            const auto &g = em.graph;
            for (int r = 0; r < g.n; r++) {
                for (int c = 0; c < g.m; c++) {
                    if (g.has_horizontal(r, c) && em.h(r, c) != ising_table(kI)) {
                        return false;
                    }
                    if (g.has_vertical(r, c) && em.v(r, c) != ising_table(kI)) {
                        return false;
                    }
                }
            }
            for (const auto &run : g.runs()) {
                int fields = 0;
                for (int c = run.first_col; c <= run.last_col; c++) {
                    const Vec &f = em.f(run.row, c);
                    if (f == Vec::Ones(2)) {
                        continue;
                    }
                    if (f(1) != cplx(1.0) || !ising_value_allowed(f(0))) {
                        return false;
                    }
                    fields++;
                }
                if (fields > 1) {
                    return false;
                }
            }
            return em.pins.empty();
        }
        case CompileTarget::SixVertex: {
            const auto &vm = std::get<VertexModel>(ci.model);
            for (const auto &v : vm.vertices) {
                Mat m(4, 4);
                for (int a = 0; a < 16; a++) {
                    m(a / 4, a % 4) = v.w[static_cast<size_t>(a)];
                }
                if (!is_six_vertex_form(m, 0.0)) {
                    return false;
                }
            }
            return true;
        }
        case CompileTarget::Potts: {
            const auto &em = std::get<EdgeModel>(ci.model);
            const auto &g = em.graph;
            for (int r = 0; r < g.n; r++) {
                for (int c = 0; c < g.m; c++) {
                    if (g.has_horizontal(r, c) && !potts_ok(em.h(r, c))) {
                        return false;
                    }
                    if (g.has_vertical(r, c) && !potts_ok(em.v(r, c))) {
                        return false;
                    }
                }
            }
            for (const Pin &p : em.pins) {
                if (!potts_ok(p.table)) {
                    return false;
                }
            }
            return true;
        }
        case CompileTarget::Lgt: return lgt_model_whitelisted(std::get<LgtModel>(ci.model));
    }
    return false;
}

}  // namespace latcirc

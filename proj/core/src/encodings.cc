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

#include <algorithm>
#include <cmath>
#include <random>

#include "latcirc/parallel.h"
#include "latcirc/qcirc.h"

namespace latcirc {

namespace {

Vec basis_vec(int q, const std::vector<int> &digits) {
    size_t idx = 0;
    for (int d : digits) {
        idx = idx * static_cast<size_t>(q) + static_cast<size_t>(d);
    }
    Vec v = Vec::Zero(static_cast<Eigen::Index>(ipow(static_cast<uint64_t>(q), static_cast<unsigned>(digits.size()))));
    v(static_cast<Eigen::Index>(idx)) = 1.0;
    return v;
}

Mat mat2(cplx a, cplx b, cplx c, cplx d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
}

Mat pauli_z() { return mat2(1.0, 0.0, 0.0, -1.0); }

std::vector<int> digits_of(size_t idx, int q, int width) {
    std::vector<int> d(static_cast<size_t>(width));
    for (int i = width - 1; i >= 0; i--) {
        d[static_cast<size_t>(i)] = static_cast<int>(idx % static_cast<size_t>(q));
        idx /= static_cast<size_t>(q);
    }
    return d;
}

size_t index_of(const std::vector<int> &digits, int q) {
    size_t idx = 0;
    for (int d : digits) {
        idx = idx * static_cast<size_t>(q) + static_cast<size_t>(d);
    }
    return idx;
}

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

Vec random_state(std::mt19937_64 &rng, Eigen::Index dim) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vec v(dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        v(i) = cplx(n(rng), n(rng));
    }
    return v / v.norm();
}

PhysOp pin(int target, int aux_value, cplx mu, cplx nu, int step, int &aux_counter, std::string note = "") {
    PhysOp op;
    op.kind = PhysKind::Pin;
    op.targets = {target};
    op.aux_value = aux_value;
    op.mu = mu;
    op.nu = nu;
    op.aux_id = aux_counter++;
    op.step = step;
    op.note = std::move(note);
    return op;
}

PhysOp horizontal(int target, cplx mu, cplx nu, int step) {
    PhysOp op;
    op.kind = PhysKind::Horizontal;
    op.targets = {target};
    op.mu = mu;
    op.nu = nu;
    op.step = step;
    return op;
}

PhysOp vertical(int a, int b, cplx mu, cplx nu, int step) {
    PhysOp op;
    op.kind = PhysKind::Vertical;
    op.targets = {a, b};
    op.mu = mu;
    op.nu = nu;
    op.step = step;
    return op;
}

PhysOp temporal(int target, cplx e, int step, std::string note = "") {
    PhysOp op;
    op.kind = PhysKind::Temporal;
    op.targets = {target};
    op.mu = e;
    op.step = step;
    op.note = std::move(note);
    return op;
}

PhysOp face(std::vector<int> targets, std::vector<int> aux_fixed, cplx e, int step, std::string note = "") {
    PhysOp op;
    op.kind = PhysKind::Face;
    op.targets = std::move(targets);
    op.aux_fixed = std::move(aux_fixed);
    op.mu = e;
    op.step = step;
    op.note = std::move(note);
    return op;
}

PhysOp reset(int target, int value, int step) {
    PhysOp op;
    op.kind = PhysKind::Reset;
    op.targets = {target};
    op.aux_value = value;
    op.step = step;
    return op;
}

GateRecipe potts_base(std::string name, int logical) {
    GateRecipe r;
    r.name = std::move(name);
    r.encoding = potts_encoding();
    r.logical_qubits = logical;
    r.width = 2 * logical;
    for (int k = 0; k < logical; k++) {
        r.inputs.push_back({2 * k, 2 * k + 1});
    }
    r.outputs = r.inputs;
    r.init.assign(static_cast<size_t>(r.width), 0);
    r.readout.assign(static_cast<size_t>(r.width), 0);
    return r;
}

GateRecipe lgt_base(std::string name, int logical, int width) {
    GateRecipe r;
    r.name = std::move(name);
    r.encoding = lgt_encoding();
    r.logical_qubits = logical;
    r.width = width;
    for (int k = 0; k < logical; k++) {
        r.inputs.push_back({4 * k, 4 * k + 1, 4 * k + 2, 4 * k + 3});
    }
    r.outputs = r.inputs;
    r.init.assign(static_cast<size_t>(width), 0);
    r.readout.assign(static_cast<size_t>(width), 0);
    return r;
}

}  // namespace

LogicalEncoding six_vertex_encoding() {
    LogicalEncoding e;
    e.kind = EncodingKind::SixVertexHeisenberg;
    e.name = "SixVertexHeisenberg";
    e.q = 2;
    e.physical_per_logical = 4;
    Vec singlet = (basis_vec(2, {0, 1}) - basis_vec(2, {1, 0})) / std::sqrt(2.0);
    e.zero = kron(singlet, singlet);
    return e;
}

LogicalEncoding potts_encoding() {
    LogicalEncoding e;
    e.kind = EncodingKind::PottsQutrit;
    e.name = "PottsQutrit";
    e.q = 3;
    e.physical_per_logical = 2;
    e.zero = basis_vec(3, {0, 1});
    e.one = basis_vec(3, {1, 2});
    return e;
}

LogicalEncoding lgt_encoding() {
    LogicalEncoding e;
    e.kind = EncodingKind::LgtFourQubit;
    e.name = "LgtFourQubit";
    e.q = 2;
    e.physical_per_logical = 4;
    e.zero = basis_vec(2, {0, 0, 0, 0});
    e.one = basis_vec(2, {1, 1, 1, 1});
    return e;
}

Vec embed(const LogicalEncoding &enc, const Vec &logical) {
    int k = 0;
    while ((Eigen::Index{1} << k) < logical.size()) {
        k++;
    }
    if ((Eigen::Index{1} << k) != logical.size()) {
        throw Error(ErrorKind::DimensionMismatch, "logical vector length is not a power of two");
    }
    if (enc.one.size() == 0) {
        for (Eigen::Index x = 1; x < logical.size(); x++) {
            if (logical(x) != cplx(0.0)) {
                throw Error(ErrorKind::BadParameter, enc.name + " fixes only |0>_L");
            }
        }
    }
    Eigen::Index block = enc.zero.size();
    Vec out = Vec::Zero(static_cast<Eigen::Index>(ipow(static_cast<uint64_t>(block), static_cast<unsigned>(k))));
    for (Eigen::Index x = 0; x < logical.size(); x++) {
        if (logical(x) == cplx(0.0)) {
            continue;
        }
        Vec v = Vec::Ones(1);
        for (int b = k - 1; b >= 0; b--) {
            bool bit = (x >> b) & 1;
            v = kron(v, bit ? enc.one : enc.zero);
        }
        out += logical(x) * v;
    }
    return out;
}

// ---- six-vertex ----

SixVertexGates six_vertex_gates(double t) {
    SixVertexGates g;
    g.U = Mat::Zero(4, 4);
    cplx e = std::polar(1.0, 2 * t);
    g.U(0, 0) = e;
    g.U(3, 3) = e;
    g.U(1, 1) = std::cos(2 * t);
    g.U(2, 2) = std::cos(2 * t);
    g.U(1, 2) = kI * std::sin(2 * t);
    g.U(2, 1) = kI * std::sin(2 * t);
    const double r = 1.0 / std::sqrt(2.0);
    g.V = Mat::Zero(4, 4);
    g.V(0, 0) = 1.0;
    g.V(3, 3) = 1.0;
    g.V(1, 1) = r;
    g.V(2, 2) = r;
    g.V(1, 2) = r;
    g.V(2, 1) = -r;
    return g;
}

Mat heisenberg_exchange() {
    Mat x = mat2(0.0, 1.0, 1.0, 0.0);
    Mat y = mat2(0.0, -kI, kI, 0.0);
    Mat z = pauli_z();
    return kron(x, x) + kron(y, y) + kron(z, z);
}

bool is_six_vertex_form(const Mat &g, double tol) {
    if (g.rows() != 4 || g.cols() != 4) {
        return false;
    }
    auto allowed = [](Eigen::Index r, Eigen::Index c) {
        return (r == 0 && c == 0) || (r == 3 && c == 3) || ((r == 1 || r == 2) && (c == 1 || c == 2));
    };
    for (Eigen::Index r = 0; r < 4; r++) {
        for (Eigen::Index c = 0; c < 4; c++) {
            if (!allowed(r, c) && std::abs(g(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

// ---- Ising ----

const IsingGateSet &ising_gate_set() {
    static const IsingGateSet set = [] {
        IsingGateSet s;
        s.W_h = mat2(kI, 1.0, 1.0, kI);
        s.W_h_bar = s.W_h / std::sqrt(2.0);
        s.W_v = Mat::Zero(4, 4);
        s.W_v(0, 0) = kI;
        s.W_v(1, 1) = 1.0;
        s.W_v(2, 2) = 1.0;
        s.W_v(3, 3) = kI;
        s.V = mat2(std::polar(1.0, kPi / 4), 0.0, 0.0, 1.0);
        s.V_half = mat2(std::polar(1.0, kPi / 8), 0.0, 0.0, 1.0);
        s.K = s.W_h_bar * s.V;
        s.T = s.V_half * s.W_h_bar * s.V_half;
        Mat tt = kron(s.T, s.T);
        s.T2_Wv_T2 = tt * s.W_v * tt;
        return s;
    }();
    return set;
}

Mat ising_composite_h() {
    const auto &s = ising_gate_set();
    Mat z = pauli_z();
    Mat kd = s.K.adjoint();
    return z * s.K * z * s.K * z * kd * kd * z;
}

Mat ising_composite_p() {
    const auto &s = ising_gate_set();
    Mat z = pauli_z();
    Mat kd = s.K.adjoint();
    return s.K * z * kd * z * kd * z * s.K;
}

InversePower find_inverse_power(const Mat &gate, double delta, long cap) {
    if (!is_unitary(gate, 1e-10)) {
        throw Error(ErrorKind::NonUnitaryCircuit, "find_inverse_power needs a unitary gate");
    }
    if (!(delta > 0)) {
        throw Error(ErrorKind::BadParameter, "delta must be positive");
    }
    Mat target = gate.adjoint();
    Mat power = gate;
    for (long m = 1; m <= cap; m++) {
        // Cheap Frobenius screen before the exact phase-optimized distance.
        cplx overlap = (target.adjoint() * power).trace();
        double fro2 = 2.0 * static_cast<double>(gate.rows()) - 2.0 * std::abs(overlap);
        if (fro2 < 4.0 * delta * delta * static_cast<double>(gate.rows())) {
            double d = distance_up_to_phase(power, target);
            if (d < delta) {
                return InversePower{m, d};
            }
        }
        power = power * gate;
    }
    throw Error(ErrorKind::SearchExhausted, "no power up to " + std::to_string(cap) + " reaches the inverse");
}

// ---- recipes ----

const char *phys_kind_name(PhysKind k) {
    switch (k) {
        case PhysKind::Horizontal: return "horizontal";
        case PhysKind::Pin: return "pin";
        case PhysKind::Vertical: return "vertical";
        case PhysKind::Temporal: return "temporal";
        case PhysKind::Face: return "face";
        case PhysKind::Reset: return "reset";
    }
    return "?";
}

Mat PhysOp::matrix(int q) const {
    switch (kind) {
        case PhysKind::Horizontal: {
            Mat m = Mat::Constant(q, q, nu);
            for (int i = 0; i < q; i++) {
                m(i, i) = mu;
            }
            return m;
        }
        case PhysKind::Pin: {
            Mat m = Mat::Zero(q, q);
            for (int i = 0; i < q; i++) {
                m(i, i) = i == aux_value ? mu : nu;
            }
            return m;
        }
        case PhysKind::Vertical: {
            Mat m = Mat::Zero(q * q, q * q);
            for (int a = 0; a < q; a++) {
                for (int b = 0; b < q; b++) {
                    m(a * q + b, a * q + b) = a == b ? mu : nu;
                }
            }
            return m;
        }
        case PhysKind::Temporal: return mat2(1.0, mu, mu, 1.0);
        case PhysKind::Face: {
            int fixed = 0;
            for (int v : aux_fixed) {
                fixed ^= v & 1;
            }
            size_t k = targets.size();
            Mat m = Mat::Zero(Eigen::Index{1} << k, Eigen::Index{1} << k);
            for (Eigen::Index s = 0; s < m.rows(); s++) {
                int parity = (__builtin_popcount(static_cast<unsigned>(s)) + fixed) % 2;
                m(s, s) = parity ? mu : cplx(1.0);
            }
            return m;
        }
        case PhysKind::Reset: {
            Mat m = Mat::Zero(q, q);
            m(aux_value, aux_value) = 1.0;
            return m;
        }
    }
    return Mat();
}

void check_auxiliaries(const GateRecipe &r) {
    std::vector<int> seen;
    for (const PhysOp &op : r.steps) {
        if (op.kind != PhysKind::Pin) {
            continue;
        }
        if (op.aux_id < 0 || std::find(seen.begin(), seen.end(), op.aux_id) != seen.end()) {
            throw Error(ErrorKind::InvalidConfig,
                        r.name + ": auxiliary " + std::to_string(op.aux_id) + " reused without reset");
        }
        seen.push_back(op.aux_id);
    }
}

Vec execute_recipe(const GateRecipe &r, const Vec &logical_in) {
    check_auxiliaries(r);
    const int q = r.encoding.q;
    const int ppl = r.encoding.physical_per_logical;
    const size_t dim = ipow(static_cast<uint64_t>(q), static_cast<unsigned>(r.width));
    if (logical_in.size() != (Eigen::Index{1} << r.logical_qubits)) {
        throw Error(ErrorKind::DimensionMismatch, r.name + ": logical input has the wrong length");
    }
    std::vector<int> role(static_cast<size_t>(r.width), -1);
    for (int k = 0; k < r.logical_qubits; k++) {
        for (int p : r.inputs[static_cast<size_t>(k)]) {
            role[static_cast<size_t>(p)] = k;
        }
    }
    StateVector state = StateVector::Zero(static_cast<Eigen::Index>(dim));
    for (size_t idx = 0; idx < dim; idx++) {
        std::vector<int> d = digits_of(idx, q, r.width);
        bool ok = true;
        for (int p = 0; p < r.width && ok; p++) {
            if (role[static_cast<size_t>(p)] < 0 && d[static_cast<size_t>(p)] != r.init[static_cast<size_t>(p)]) {
                ok = false;
            }
        }
        if (!ok) {
            continue;
        }
        cplx amp = 0.0;
        for (Eigen::Index x = 0; x < logical_in.size(); x++) {
            if (logical_in(x) == cplx(0.0)) {
                continue;
            }
            cplx a = logical_in(x);
            for (int k = 0; k < r.logical_qubits && a != cplx(0.0); k++) {
                bool bit = (x >> (r.logical_qubits - 1 - k)) & 1;
                const Vec &code = bit ? r.encoding.one : r.encoding.zero;
                if (code.size() == 0) {
                    a = 0.0;
                    break;
                }
                std::vector<int> local;
                for (int p : r.inputs[static_cast<size_t>(k)]) {
                    local.push_back(d[static_cast<size_t>(p)]);
                }
                a *= code(static_cast<Eigen::Index>(index_of(local, q)));
            }
            amp += a;
        }
        state(static_cast<Eigen::Index>(idx)) = amp;
    }
    for (const PhysOp &op : r.steps) {
        apply_gate_inplace(state, Gate{op.matrix(q), op.targets, op.note}, r.width, q);
    }
    std::vector<int> out_pos;
    for (const auto &grp : r.outputs) {
        out_pos.insert(out_pos.end(), grp.begin(), grp.end());
    }
    const int nout = static_cast<int>(out_pos.size());
    (void)ppl;
    Vec out = Vec::Zero(static_cast<Eigen::Index>(ipow(static_cast<uint64_t>(q), static_cast<unsigned>(nout))));
    std::vector<int> d = r.readout;
    for (Eigen::Index o = 0; o < out.size(); o++) {
        std::vector<int> od = digits_of(static_cast<size_t>(o), q, nout);
        for (int i = 0; i < nout; i++) {
            d[static_cast<size_t>(out_pos[static_cast<size_t>(i)])] = od[static_cast<size_t>(i)];
        }
        out(o) = state(static_cast<Eigen::Index>(index_of(d, q)));
    }
    return out;
}

Vec expected_output(const GateRecipe &r, const Vec &logical_in) {
    return r.normalization * embed(r.encoding, r.ideal * logical_in);
}

GateRecipe potts_I1() {
    GateRecipe r = potts_base("potts.I1", 1);
    r.steps.push_back(vertical(0, 1, 1.0, 1.0, 1));
    r.ideal = Mat::Identity(2, 2);
    return r;
}

GateRecipe potts_P() {
    GateRecipe r = potts_base("potts.P", 1);
    int aux = 0;
    r.steps.push_back(pin(1, 2, std::polar(1.0, kPi / 8), 1.0, 1, aux));
    r.ideal = rz(kPi / 8);
    return r;
}

GateRecipe potts_H(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 0.1)) {
        throw Error(ErrorKind::BadEpsilon, "epsilon must lie in (0, 0.1]");
    }
    GateRecipe r = potts_base("potts.H", 1);
    int aux = 0;
    const cplx mi = -kI;
    const cplx big = 1.0 / (std::sqrt(2.0) * epsilon);
    r.steps.push_back(pin(1, 2, mi, 1.0, 1, aux));
    r.steps.push_back(horizontal(0, mi, 1.0, 2));
    r.steps.push_back(horizontal(1, 1.0, 1.0, 2));
    r.steps.push_back(pin(0, 2, 0.0, 1.0, 3, aux));
    r.steps.push_back(pin(1, 0, 0.0, 1.0, 3, aux));
    r.steps.push_back(vertical(0, 1, 0.0, 1.0, 4));
    r.steps.push_back(pin(0, 0, epsilon, 1.0, 5, aux));
    r.steps.push_back(pin(1, 2, epsilon, 1.0, 5, aux));
    r.steps.push_back(pin(0, 1, big, 1.0, 5, aux));
    r.steps.push_back(pin(1, 1, big, 1.0, 5, aux));
    // (-i)^3 = i on both upper values.
    for (int k = 0; k < 3; k++) {
        r.steps.push_back(pin(0, 0, mi, 1.0, 6, aux));
        r.steps.push_back(pin(0, 1, mi, 1.0, 6, aux));
    }
    r.steps.push_back(pin(1, 2, mi, 1.0, 7, aux));
    r.ideal = mat2(1.0, 1.0, 1.0, -1.0) / std::sqrt(2.0);
    r.epsilon = epsilon;
    return r;
}

GateRecipe potts_I2() {
    GateRecipe r = potts_base("potts.I2", 2);
    r.steps.push_back(vertical(1, 2, 1.0, 1.0, 1));
    r.ideal = Mat::Identity(4, 4);
    return r;
}

GateRecipe potts_CZ() {
    GateRecipe r = potts_base("potts.CZ", 2);
    int aux = 0;
    r.steps.push_back(vertical(1, 2, -1.0, 1.0, 1));
    r.steps.push_back(pin(3, 2, -1.0, 1.0, 1, aux));
    r.ideal = logical_cz();
    return r;
}

std::vector<GateRecipe> potts_logical_gates(double epsilon) {
    return {potts_I1(), potts_P(), potts_H(epsilon), potts_I2(), potts_CZ()};
}

Mat rz(double xi) { return mat2(1.0, 0.0, 0.0, std::polar(1.0, xi)); }

GateRecipe lgt_Rz(double xi) {
    if (!(xi >= 0.0 && xi < 2 * kPi)) {
        throw Error(ErrorKind::BadParameter, "xi must lie in [0, 2pi)");
    }
    GateRecipe r = lgt_base("lgt.Rz", 1, 4);
    r.steps.push_back(face({3}, {0, 0, 0}, std::polar(1.0, xi), 1, "Rz"));
    r.ideal = rz(xi);
    return r;
}

GateRecipe lgt_diag() {
    // Edge 8 is the middle edge between the two connector faces.
    GateRecipe r = lgt_base("lgt.diag", 2, 9);
    r.steps.push_back(temporal(8, 1.0, 1, "prepare middle"));
    r.steps.push_back(face({3, 8}, {0, 0}, 0.0, 2, "copy to middle"));
    r.steps.push_back(face({8, 7}, {0, 0}, kI, 2, "couple"));
    r.steps.push_back(temporal(8, 1.0, 3, "discard middle"));
    r.steps.push_back(reset(8, 0, 4));
    Mat d = Mat::Identity(4, 4);
    d(1, 1) = kI;
    d(2, 2) = kI;
    r.ideal = d;
    return r;
}

GateRecipe lgt_teleport_H(double alpha) {
    // A = edges 0-3 holds the input, B = 4-7 and C = 8-11 start in |0000>.
    GateRecipe r = lgt_base("lgt.teleport_H", 1, 12);
    r.outputs = {{8, 9, 10, 11}};
    r.steps.push_back(face({3, 4}, {0, 0}, std::polar(1.0, alpha + kPi), 1, "Rz(alpha+pi) on A"));
    for (int p = 4; p < 8; p++) {
        r.steps.push_back(temporal(p, 1.0, 1, "B to |0>+|1>"));
    }
    for (int p = 4; p < 7; p++) {
        r.steps.push_back(face({p, p + 1}, {0, 0}, 0.0, 2, "B parity"));
    }
    r.steps.push_back(face({7, 8}, {0, 0}, kI, 2, "phase i on B"));
    for (int p = 8; p < 12; p++) {
        r.steps.push_back(temporal(p, 1.0, 2, "C to |0>+|1>"));
    }
    for (int p = 8; p < 11; p++) {
        r.steps.push_back(face({p, p + 1}, {0, 0}, 0.0, 3, "C parity"));
    }
    r.steps.push_back(face({7, 8}, {0, 0}, kI, 3, "B-C coupling"));
    r.steps.push_back(face({3, 4}, {0, 0}, 0.0, 3, "Bell projection A-B"));
    for (int p = 0; p < 8; p++) {
        r.steps.push_back(temporal(p, 1.0, 4, "discard"));
    }
    r.ideal = rz(kPi / 2) * mat2(1.0, 1.0, 1.0, -1.0) / std::sqrt(2.0) * rz(alpha);
    r.normalization = std::sqrt(2.0);
    // Eight fresh edges, each sent to |0>+|1> = sqrt(2)|+>.
    r.metadata["aux_prefactor"] = std::pow(std::sqrt(2.0), 8);
    r.metadata["next_phase_offset"] = kPi / 2;
    r.metadata["alpha"] = alpha;
    return r;
}

GateRecipe lgt_I1(double zeta) {
    if (!(zeta > 0.0 && zeta <= 0.1)) {
        throw Error(ErrorKind::BadParameter, "zeta must lie in (0, 0.1]");
    }
    GateRecipe r = lgt_base("lgt.I1", 1, 4);
    for (int p = 0; p < 4; p++) {
        r.steps.push_back(temporal(p, zeta, 1, "I1(zeta)"));
    }
    r.ideal = Mat::Identity(2, 2);
    r.epsilon = zeta;
    return r;
}

std::vector<GateRecipe> lgt_logical_gates(double zeta) {
    return {lgt_Rz(kPi / 5), lgt_diag(), lgt_teleport_H(0.0), lgt_I1(zeta)};
}

RecipeReport verify_recipe(const GateRecipe &r, int trials, uint64_t seed, double tol) {
    RecipeReport rep;
    rep.name = r.name;
    rep.trials = trials;
    const Eigen::Index dim = Eigen::Index{1} << r.logical_qubits;
    std::vector<Vec> inputs;
    for (Eigen::Index b = 0; b < dim; b++) {
        Vec v = Vec::Zero(dim);
        v(b) = 1.0;
        inputs.push_back(v);
    }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; t++) {
        inputs.push_back(random_state(rng, dim));
    }
    std::vector<double> dist(inputs.size());
    parallel_for(inputs.size(), [&](size_t i) {
        dist[i] = (execute_recipe(r, inputs[i]) - expected_output(r, inputs[i])).norm();
    });
    for (double d : dist) {
        rep.max_distance = std::max(rep.max_distance, d);
    }
    rep.pass = rep.max_distance < tol;
    if (!rep.pass) {
        rep.failures.push_back(r.name + ": max distance " + std::to_string(rep.max_distance));
    }
    return rep;
}

RecipeReport verify_potts_h_scaling(const std::vector<double> &epsilons, int trials, uint64_t seed) {
    RecipeReport rep;
    rep.name = "potts.H";
    rep.trials = trials;
    std::vector<double> xs, ys;
    for (double e : epsilons) {
        RecipeReport one = verify_recipe(potts_H(e), trials, seed, 1.0);
        rep.scan.emplace_back(e, one.max_distance);
        rep.max_distance = std::max(rep.max_distance, one.max_distance);
        xs.push_back(std::log(e));
        ys.push_back(std::log(one.max_distance));
    }
    if (xs.size() >= 2) {
        double mx = 0, my = 0;
        for (size_t i = 0; i < xs.size(); i++) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= static_cast<double>(xs.size());
        my /= static_cast<double>(xs.size());
        double sxy = 0, sxx = 0;
        for (size_t i = 0; i < xs.size(); i++) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        rep.fitted_slope = sxy / sxx;
        rep.pass = std::abs(*rep.fitted_slope - 2.0) <= 0.2;
        if (!rep.pass) {
            rep.failures.push_back("potts.H: fitted slope " + std::to_string(*rep.fitted_slope));
        }
    }
    return rep;
}

// ---- whitelists ----

bool potts_value_allowed(cplx mu, cplx nu, double epsilon, double tol) {
    const std::vector<std::pair<cplx, cplx>> allowed = {
        {1.0, 0.0},        {std::polar(1.0, kPi / 8), 1.0}, {-kI, 1.0}, {1.0, 1.0}, {0.0, 1.0}, {epsilon, 1.0},
        {1.0 / (std::sqrt(2.0) * epsilon), 1.0}, {-1.0, 1.0},
    };
    for (const auto &[m, n] : allowed) {
        if (near(mu, m, tol) && near(nu, n, tol)) {
            return true;
        }
    }
    return false;
}

bool lgt_value_allowed(cplx e, double zeta, double tol) {
    return std::abs(e) <= tol || std::abs(std::abs(e) - 1.0) <= tol || near(e, 0.5, tol) || near(e, zeta, tol);
}

bool ising_value_allowed(cplx e, double tol) { return near(e, kI, tol) || near(e, std::polar(1.0, kPi / 4), tol); }

bool recipe_whitelisted(const GateRecipe &r) {
    double eps = r.epsilon.value_or(1e-3);
    for (const PhysOp &op : r.steps) {
        switch (op.kind) {
            case PhysKind::Horizontal:
            case PhysKind::Pin:
            case PhysKind::Vertical:
                if (!potts_value_allowed(op.mu, op.nu, eps)) {
                    return false;
                }
                break;
            case PhysKind::Temporal:
            case PhysKind::Face:
                if (!lgt_value_allowed(op.mu, eps)) {
                    return false;
                }
                break;
            case PhysKind::Reset: break;
        }
    }
    return true;
}

// ---- logical decompositions ----

EulerAngles euler_angles(const Mat &u) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw Error(ErrorKind::DimensionMismatch, "euler_angles needs a 2x2 matrix");
    }
    // Rz(g) H Rz(b) H Rz(a) = e^{i b/2} [[c, -i s e^{ia}], [-i s e^{ig}, c e^{i(a+g)}]].
    double c = std::abs(u(0, 0));
    double s = std::max(std::abs(u(0, 1)), std::abs(u(1, 0)));
    EulerAngles e;
    e.beta = 2.0 * std::atan2(s, c);
    double theta;
    if (c > 1e-300) {
        theta = std::arg(u(0, 0));
        e.alpha = std::arg(u(1, 1)) - theta;
        e.gamma = 0.0;
        if (s > 1e-300) {
            e.alpha = std::arg(u(0, 1)) + kPi / 2 - theta;
            e.gamma = std::arg(u(1, 0)) + kPi / 2 - theta;
        }
    } else {
        e.alpha = 0.0;
        theta = std::arg(u(0, 1)) + kPi / 2;
        e.gamma = std::arg(u(1, 0)) + kPi / 2 - theta;
    }
    e.phase = theta - e.beta / 2;
    auto wrap = [](double x) {
        x = std::fmod(x, 2 * kPi);
        return x < 0 ? x + 2 * kPi : x;
    };
    e.alpha = wrap(e.alpha);
    e.gamma = wrap(e.gamma);
    e.phase = wrap(e.phase);
    return e;
}

Mat euler_compose(const EulerAngles &e) {
    Mat h = mat2(1.0, 1.0, 1.0, -1.0) / std::sqrt(2.0);
    return std::polar(1.0, e.phase) * rz(e.gamma) * h * rz(e.beta) * h * rz(e.alpha);
}

Mat logical_cz() {
    Mat m = Mat::Identity(4, 4);
    m(3, 3) = -1.0;
    return m;
}

Mat cz_from_diag() {
    Mat d = Mat::Identity(4, 4);
    d(1, 1) = kI;
    d(2, 2) = kI;
    return kron(rz(-kPi / 2), rz(-kPi / 2)) * d;
}

}  // namespace latcirc

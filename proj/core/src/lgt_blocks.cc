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

#include "latcirc/lgt_blocks.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "latcirc/encodings.h"

namespace latcirc {

namespace {

cplx phase(double x) { return std::polar(1.0, x); }

double wrap(double x) {
    x = std::fmod(x, 2 * kPi);
    return x < 0 ? x + 2 * kPi : x;
}

cplx i_power(int n) {
    static const cplx p[4] = {1.0, kI, -1.0, -kI};
    return p[((n % 4) + 4) % 4];
}

LgtEdge y_edge(int x, int y, int z) { return LgtEdge{x, y, z, LgtDir::Y}; }
LgtEdge x_edge(int x, int y, int z) { return LgtEdge{x, y, z, LgtDir::X}; }

}  // namespace

LgtCircuitBuilder::LgtCircuitBuilder(int wires)
    : wires_(wires),
      pos_(static_cast<size_t>(std::max(wires, 0)), 0),
      excess_(static_cast<size_t>(std::max(wires, 0)), 0.0),
      pending_(static_cast<size_t>(std::max(wires, 0)), 0),
      pending_src_(static_cast<size_t>(std::max(wires, 0)), -1) {
    if (wires < 1) {
        throw Error(ErrorKind::InvalidConfig, "LGT layout needs at least one wire");
    }
}

void LgtCircuitBuilder::check_wire(int w) const {
    if (w < 0 || w >= wires_) {
        throw Error(ErrorKind::InvalidConfig, "wire " + std::to_string(w) + " out of range");
    }
}

void LgtCircuitBuilder::face(int x, int y, int z, cplx odd, const std::string &label, int source) {
    faces_.push_back(FaceOp{LgtFace{x, y, z, LgtPlane::XY}, odd, label});
    trace_.push_back(Trace{source, "face(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) +
                                       ") " + label});
}

void LgtCircuitBuilder::temporal(LgtEdge e, cplx odd) { temporals_.push_back(TemporalOp{e, odd}); }

void LgtCircuitBuilder::rz(int wire, double xi, int source) {
    check_wire(wire);
    excess_[static_cast<size_t>(wire)] -= xi;
    trace_.push_back(Trace{source, "Rz deferred on wire " + std::to_string(wire)});
}

void LgtCircuitBuilder::teleport(int wire, double alpha, int source, const std::string &what) {
    if (wire > 0) {
        flush(wire - 1, source);
    }
    flush(wire, source);
    const int k = pos_[static_cast<size_t>(wire)];
    const int w = wire;
    const int s = slice_;
    const int a = 4 * k, b = 4 * k + 4, c = 4 * k + 8;
    face(a + 3, w, s, phase(wrap(alpha + kPi)), what + ": Rz(alpha+pi) on A", source);
    for (int i = 0; i < 4; i++) {
        temporal(y_edge(b + i, w, s), 1.0);
    }
    for (int i = 0; i < 3; i++) {
        face(b + i, w, s + 1, 0.0, what + ": B parity", source);
    }
    face(b + 3, w, s + 1, kI, what + ": B phase", source);
    for (int i = 0; i < 4; i++) {
        temporal(y_edge(c + i, w, s + 1), 1.0);
    }
    for (int i = 0; i < 3; i++) {
        face(c + i, w, s + 2, 0.0, what + ": C parity", source);
    }
    face(b + 3, w, s + 2, kI, what + ": B-C coupling", source);
    face(a + 3, w, s + 2, 0.0, what + ": Bell A-B", source);
    for (int i = 0; i < 4; i++) {
        temporal(y_edge(a + i, w, s + 2), 1.0);
        temporal(y_edge(b + i, w, s + 2), 1.0);
    }
    slice_ += 3;
    pos_[static_cast<size_t>(wire)] += 2;
    blocks_++;
}

void LgtCircuitBuilder::hadamard(int wire, int source) {
    check_wire(wire);
    double &e = excess_[static_cast<size_t>(wire)];
    teleport(wire, wrap(-e), source, "H");
    e = kPi / 2;
}

void LgtCircuitBuilder::raw_teleport(int wire, double alpha, int source) {
    check_wire(wire);
    teleport(wire, wrap(alpha), source, "block");
}

void LgtCircuitBuilder::diag(int wire, int source) {
    check_wire(wire);
    if (wire + 1 >= wires_) {
        throw Error(ErrorKind::InvalidConfig, "diag needs wires (w, w+1)");
    }
    int d = pos_[static_cast<size_t>(wire)] - pos_[static_cast<size_t>(wire + 1)];
    if ((d / 2) % 2 != 0) {
        throw Error(ErrorKind::UnsupportedGate, "wires " + std::to_string(wire) + " and " + std::to_string(wire + 1) +
                                                    " differ by an odd number of Hadamard blocks");
    }
    int lag = d > 0 ? wire + 1 : wire;
    for (int n = 0; n < std::abs(d) / 2; n++) {
        hadamard(lag, -1);
    }
    pending_[static_cast<size_t>(wire)]++;
    pending_src_[static_cast<size_t>(wire)] = source;
}

void LgtCircuitBuilder::flush(int pair, int source) {
    int n = pending_[static_cast<size_t>(pair)] % 4;
    int src = pending_src_[static_cast<size_t>(pair)];
    pending_[static_cast<size_t>(pair)] = 0;
    if (n == 0) {
        return;
    }
    (void)source;
    const int k = pos_[static_cast<size_t>(pair)];
    const int s = slice_;
    LgtEdge m = x_edge(4 * k + 3, pair + 1, s);
    temporal(m, 1.0);
    face(4 * k + 3, pair, s + 1, 0.0, "diag: copy to middle", src);
    face(4 * k + 3, pair + 1, s + 1, i_power(n), "diag: couple", src);
    temporal(x_edge(4 * k + 3, pair + 1, s + 1), 1.0);
    resets_.push_back(x_edge(4 * k + 3, pair + 1, s + 2));
    trace_.push_back(Trace{src, "reset X(" + std::to_string(4 * k + 3) + "," + std::to_string(pair + 1) + ")"});
    slice_ += 2;
}

LgtModel LgtCircuitBuilder::build(const std::vector<int> &left_bits, const std::vector<int> &right_bits,
                                  bool correct_phases) {
    if (static_cast<int>(left_bits.size()) != wires_ || static_cast<int>(right_bits.size()) != wires_) {
        throw Error(ErrorKind::DimensionMismatch, "boundary bits must list one value per wire");
    }
    for (int w = 0; w + 1 < wires_; w++) {
        flush(w, -1);
    }
    if (correct_phases) {
        for (int w = 0; w < wires_; w++) {
            double e = wrap(excess_[static_cast<size_t>(w)]);
            if (std::abs(e) > 1e-15 && std::abs(e - 2 * kPi) > 1e-15) {
                int k = pos_[static_cast<size_t>(w)];
                face(4 * k + 3, w, slice_, phase(wrap(-e)), "final Rz", -1);
                slice_++;
            }
            excess_[static_cast<size_t>(w)] = 0.0;
        }
    }
    int kmax = *std::max_element(pos_.begin(), pos_.end());
    LgtModel m;
    m.X = 4 * (kmax + 1);
    m.Y = wires_;
    m.Z = slice_ + 1;
    const int L = m.num_lines();

    for (int z = 0; z < m.Z; z++) {
        for (int l = 0; l < L; l++) {
            LgtEdge e = m.line_edge(l, z);
            LgtFace f = e.dir == LgtDir::X ? LgtFace{e.x, e.y, z, LgtPlane::XT} : LgtFace{e.x, e.y, z, LgtPlane::YT};
            m.set_face(f, 1.0, 0.0, "hold");
        }
    }
    for (const TemporalOp &t : temporals_) {
        LgtFace f = t.edge.dir == LgtDir::X ? LgtFace{t.edge.x, t.edge.y, t.edge.z, LgtPlane::XT}
                                            : LgtFace{t.edge.x, t.edge.y, t.edge.z, LgtPlane::YT};
        m.set_face(f, 1.0, t.odd, t.odd == cplx(1.0) ? "release" : "hold");
    }
    for (const FaceOp &f : faces_) {
        m.set_face(f.face, 1.0, f.odd, f.label);
    }
    for (int z = 0; z < m.Z; z++) {
        for (int y = 0; y <= m.Y; y++) {
            for (int x = 0; x <= m.X; x++) {
                m.gauge_fixed[LgtEdge{x, y, z, LgtDir::T}] = 0;
            }
        }
    }
    for (const LgtEdge &r : resets_) {
        m.gauge_fixed[r] = 0;
    }
    std::vector<int> right(static_cast<size_t>(L), 0), left(static_cast<size_t>(L), 0);
    for (int w = 0; w < wires_; w++) {
        int k = pos_[static_cast<size_t>(w)];
        for (int i = 0; i < 4; i++) {
            right[static_cast<size_t>(m.line_of(y_edge(i, w, 0)))] = right_bits[static_cast<size_t>(w)];
            left[static_cast<size_t>(m.line_of(y_edge(4 * k + i, w, 0)))] = left_bits[static_cast<size_t>(w)];
        }
    }
    m.boundary = Boundary::fixed(left, right);
    m.validate();
    GaugeCheck gc = validate_gauge_fixing(m);
    if (!gc.ok) {
        throw Error(ErrorKind::GaugeLoop, "LGT layout produced a gauge loop");
    }
    return m;
}

LgtModel lgt_teleport_template(double alpha, int in_bit, int out_bit) {
    LgtCircuitBuilder b(1);
    b.raw_teleport(0, alpha);
    return b.build({out_bit}, {in_bit}, false);
}

LgtModel lgt_rz_template(double xi, int bit) {
    LgtCircuitBuilder b(1);
    b.rz(0, xi);
    return b.build({bit}, {bit}, true);
}

LgtModel lgt_diag_template(int bit0, int bit1) {
    LgtCircuitBuilder b(2);
    b.diag(0);
    return b.build({bit0, bit1}, {bit0, bit1}, true);
}

bool lgt_model_whitelisted(const LgtModel &m, double zeta) {
    for (const auto &[f, c] : m.faces) {
        if (c.even != cplx(1.0) || !lgt_value_allowed(c.odd, zeta)) {
            return false;
        }
    }
    return true;
}

}  // namespace latcirc

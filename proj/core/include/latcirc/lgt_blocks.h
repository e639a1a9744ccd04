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

#ifndef LATCIRC_LGT_BLOCKS_H
#define LATCIRC_LGT_BLOCKS_H

#include <string>
#include <vector>

#include "latcirc/spinlat.h"

namespace latcirc {

// Lays logical gates out on a Z2 gauge lattice. Wire w lives in plaquette row
// y = w; logical position k holds the four Y-edges x = 4k..4k+3 of that row,
// and the plaquette (4k+3, w) connects position k to position k+1. Slices are
// consumed sequentially, one logical operation at a time.
//
// A teleport block moves a wire from position k to k+2 and applies
// Rz(pi/2) Ht Rz(alpha) with Ht = sqrt(2) H. The builder tracks the Rz(pi/2)
// excess per wire and folds it into the next block or a final Rz face, so the
// lattice realizes the logical circuit exactly with one factor sqrt(2) per
// block.
class LgtCircuitBuilder {
   public:
    struct Trace {
        int source = -1;  // logical gate index, -1 for padding
        std::string interaction;
    };

    explicit LgtCircuitBuilder(int wires);

    void rz(int wire, double xi, int source = -1);
    void hadamard(int wire, int source = -1);
    // diag(1,i,i,1) on (wire, wire+1). Pads the lagging wire with pairs of
    // blocks; throws UnsupportedGate when the wires differ by an odd number.
    void diag(int wire, int source = -1);
    // One block with an explicit alpha and no excess bookkeeping.
    void raw_teleport(int wire, double alpha, int source = -1);

    // Fixed boundaries: right_bits at slice 0, left_bits at the last slice.
    LgtModel build(const std::vector<int> &left_bits, const std::vector<int> &right_bits, bool correct_phases = true);

    int blocks() const { return blocks_; }
    int position(int wire) const { return pos_[static_cast<size_t>(wire)]; }
    const std::vector<Trace> &trace() const { return trace_; }

   private:
    struct FaceOp {
        LgtFace face;
        cplx odd;
        std::string label;
    };
    struct TemporalOp {
        LgtEdge edge;  // spatial edge at slice z; the face spans z -> z+1
        cplx odd;
    };

    void flush(int pair, int source);
    void teleport(int wire, double alpha, int source, const std::string &what);
    void face(int x, int y, int z, cplx odd, const std::string &label, int source);
    void temporal(LgtEdge e, cplx odd);
    void check_wire(int w) const;

    int wires_;
    int slice_ = 0;
    int blocks_ = 0;
    std::vector<int> pos_;
    std::vector<double> excess_;
    std::vector<int> pending_;  // diag count per pair (w, w+1)
    std::vector<int> pending_src_;
    std::vector<FaceOp> faces_;
    std::vector<TemporalOp> temporals_;
    std::vector<LgtEdge> resets_;
    std::vector<Trace> trace_;
};

// Single-wire and two-wire templates checked physically.
LgtModel lgt_teleport_template(double alpha, int in_bit, int out_bit);
LgtModel lgt_rz_template(double xi, int bit);
LgtModel lgt_diag_template(int bit0, int bit1);

// Every face weighs 1 on even parity and a whitelisted value on odd parity.
bool lgt_model_whitelisted(const LgtModel &m, double zeta = 1e-3);

}  // namespace latcirc

#endif

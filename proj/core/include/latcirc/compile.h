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

#ifndef LATCIRC_COMPILE_H
#define LATCIRC_COMPILE_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latcirc/kappa.h"
#include "latcirc/qcirc.h"
#include "latcirc/spinlat.h"

namespace latcirc {

// A gate of one of the compilers' alphabets:
//   ising:     "T" (1 target), "TWvT" (targets w, w+1)
//   sixvertex: "U" (params {t}), "V", "matrix" (4x4 in `matrix`), targets w, w+1
//   potts:     "I1", "P", "H" (1 target), "I2", "CZ" (targets w, w+1)
//   lgt:       "Rz" (params {xi}), "H" (1 target), "diag" (targets w, w+1)
struct LogicalGate {
    std::string name;
    std::vector<int> targets;
    std::vector<double> params;
    Mat matrix;
};

struct LogicalCircuit {
    int width = 0;
    std::vector<LogicalGate> gates;
};

enum class CompileTarget { Ising, SixVertex, Potts, Lgt, Dqc1 };

const char *compile_target_name(CompileTarget t);
CompileTarget parse_compile_target(const std::string &s);

struct CompileOptions {
    // Logical (Potts, LGT) or physical (six-vertex) bits; empty selects the
    // all-zero logical state or the staggered 0101... state.
    std::vector<int> left_bits;
    std::vector<int> right_bits;
    double epsilon = 1e-3;  // Potts H filter parameter
};

struct ProvenanceEntry {
    int gate = -1;  // source gate index, -1 for padding or boundary work
    std::string interaction;
};

struct CompiledInstance {
    CompileTarget target = CompileTarget::Ising;
    LatticeModel model;
    Kappa kappa;
    // The unitarized source circuit and the functional of it that Z/kappa
    // equals: <left|reference|right>, or 2^-n Tr(reference) when `trace`.
    Circuit reference;
    ProductState left;
    ProductState right;
    bool trace = false;
    std::string target_description;
    // Known approximation budget of Z/kappa against the reference (Potts H).
    double approximation_bound = 0.0;
    std::vector<ProvenanceEntry> provenance;
    std::map<std::string, double> parameters;
};

CompiledInstance compile_to_ising(const LogicalCircuit &c);
CompiledInstance compile_to_six_vertex(const LogicalCircuit &c, const CompileOptions &opt = {});
CompiledInstance compile_to_potts(const LogicalCircuit &c, const CompileOptions &opt = {});
CompiledInstance compile_to_lgt(const LogicalCircuit &c, const CompileOptions &opt = {});
CompiledInstance dqc1_instance(const LogicalCircuit &c);
CompiledInstance compile(CompileTarget t, const LogicalCircuit &c, const CompileOptions &opt = {});

// Target functional evaluated on the reference circuit.
cplx source_value(const CompiledInstance &ci);
// Z / kappa, or Z / (2^n kappa) for trace targets.
cplx normalized(const CompiledInstance &ci, cplx Z);

struct RoundTrip {
    cplx source{0.0, 0.0};
    cplx mapped{0.0, 0.0};
    std::optional<cplx> oracle;
    double error = 0.0;  // worst pairwise disagreement
    bool pass = false;
    std::string note;
};

// Three-way agreement of source value, mapped-circuit evaluation and the
// brute-force oracle. The oracle leg is skipped when it exceeds `opt.cap`.
RoundTrip round_trip(const CompiledInstance &ci, double tol = 1e-8, EnumerationOptions opt = {});

// Every emitted interaction uses a value from the target's allowed set.
bool compiled_whitelisted(const CompiledInstance &ci);

}  // namespace latcirc

#endif

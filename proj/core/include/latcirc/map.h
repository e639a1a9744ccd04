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

#ifndef LATCIRC_MAP_H
#define LATCIRC_MAP_H

#include "latcirc/kappa.h"
#include "latcirc/qcirc.h"
#include "latcirc/spinlat.h"

namespace latcirc {

// Z = kappa * <left|C|right> for Fixed and Open modes, kappa * Tr(C) for
// Periodic mode.
struct MappedCircuit {
    Circuit circuit;
    Kappa kappa;
    ProductState left;
    ProductState right;
    BoundaryKind mode = BoundaryKind::Fixed;
};

cplx evaluate(const MappedCircuit &mc);

MappedCircuit vertex_to_circuit(const VertexModel &model);
MappedCircuit edge_to_circuit(const EdgeModel &model);

struct LgtMapOptions {
    // Lines that never meet a multi-qubit gate are contracted into kappa.
    bool contract_decoupled = true;
};

MappedCircuit lgt_to_circuit(const LgtModel &model, LgtMapOptions opt = {});
MappedCircuit map_model(const LatticeModel &model);

// Z' = Tr of the mapped circuit of a periodic edge model. The returned kappa
// is 2^{tau/2}, so Z'/kappa is the trace of the unitarized circuit when every
// coupling is e^{beta J} = i.
PartitionValue periodic_ising_trace(const EdgeModel &model);

}  // namespace latcirc

#endif

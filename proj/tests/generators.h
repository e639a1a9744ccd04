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

#ifndef LATCIRC_TESTS_GENERATORS_H
#define LATCIRC_TESTS_GENERATORS_H

#include <random>

#include "latcirc/compile.h"
#include "latcirc/qcirc.h"
#include "latcirc/spinlat.h"

namespace gen {

using latcirc::cplx;
using latcirc::Mat;
using latcirc::Vec;
using Rng = std::mt19937_64;

double uniform(Rng &rng, double lo = 0.0, double hi = 1.0);
int uniform_int(Rng &rng, int lo, int hi);  // inclusive
cplx phase(Rng &rng);
// Complex number with modulus in [0.5, 1.5] and random phase.
cplx weight(Rng &rng);
Mat random_unitary(Rng &rng, int dim);
Vec random_state(Rng &rng, int dim);
std::vector<int> random_spins(Rng &rng, int count, int q);

latcirc::Boundary random_boundary(Rng &rng, latcirc::BoundaryKind kind, int size, int q);

// Tilted grid with arbitrary complex tensors, or six-vertex sparsity when
// `six_vertex` is set.
latcirc::VertexModel random_vertex(Rng &rng, int n, int m, latcirc::BoundaryKind kind, bool six_vertex);

// Random deletions and contractions on an n x m grid.
latcirc::PlanarCircuitGraph random_graph(Rng &rng, int n, int m);
latcirc::EdgeModel random_ising(Rng &rng, int n, int m, latcirc::BoundaryKind kind);
latcirc::EdgeModel random_potts(Rng &rng, int n, int m, latcirc::BoundaryKind kind);

// Temporal gauge with random values, random couplings on every face, and
// optionally one spatial edge fixed.
latcirc::LgtModel random_lgt(Rng &rng, int X, int Y, int Z, latcirc::BoundaryKind kind);

// Random circuit over a compiler's alphabet. For LGT, `max_h` caps the
// number of Hadamards (-1 for no cap); diag is drawn only on aligned wires.
latcirc::LogicalCircuit random_logical(Rng &rng, latcirc::CompileTarget t, int width, int gates, int max_h = -1);

}  // namespace gen

#endif

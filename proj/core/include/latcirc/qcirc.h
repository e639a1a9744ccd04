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

#ifndef LATCIRC_QCIRC_H
#define LATCIRC_QCIRC_H

#include <string>
#include <vector>

#include "latcirc/common.h"

namespace latcirc {

// A q^k x q^k matrix acting on k distinct qudits. targets[0] is the most
// significant digit of the row/column index.
struct Gate {
    Mat matrix;
    std::vector<int> targets;
    std::string label;

    bool is_diagonal(double tol = 0.0) const;
};

// Gates apply first-to-last. Qudit 0 is the most significant digit of a basis
// index.
class Circuit {
   public:
    Circuit() = default;
    Circuit(int width, int q);

    int width() const { return width_; }
    int q() const { return q_; }
    const std::vector<Gate> &gates() const { return gates_; }
    cplx prefactor() const { return prefactor_; }

    void set_prefactor(cplx p) { prefactor_ = p; }
    void scale(cplx s) { prefactor_ *= s; }
    void add(Gate gate);
    void add(Mat matrix, std::vector<int> targets, std::string label = "");

    size_t dimension() const;

   private:
    int width_ = 0;
    int q_ = 2;
    std::vector<Gate> gates_;
    cplx prefactor_{1.0, 0.0};
};

using StateVector = Vec;

// Per-qudit amplitude vectors; the state is their tensor product.
struct ProductState {
    std::vector<Vec> factors;

    static ProductState basis(int q, const std::vector<int> &digits);
    static ProductState uniform(int q, int width);
    int width() const { return static_cast<int>(factors.size()); }
};

StateVector to_state_vector(const ProductState &p);
StateVector basis_state(int q, const std::vector<int> &digits);

void apply_gate_inplace(StateVector &state, const Gate &gate, int width, int q);
StateVector apply_gate(const StateVector &state, const Gate &gate, int width, int q);

// Applies every gate (not the prefactor).
StateVector run(const Circuit &c, StateVector state);

// prefactor * <left| C |right>.
cplx matrix_element(const Circuit &c, const ProductState &left, const ProductState &right);

inline constexpr int kDefaultTraceCapQubits = 14;

// Sum_s <s|C|s> including the prefactor. The cap is in qubit units:
// q^width must not exceed 2^cap_qubits.
cplx trace(const Circuit &c, int cap_qubits = kDefaultTraceCapQubits);

// Dense matrix of the gate list times the prefactor.
Mat circuit_matrix(const Circuit &c);

Circuit compose(const Circuit &first, const Circuit &second);
Circuit adjoint(const Circuit &c);

// Embeds a gate into the full q^width space (naive kron construction).
Mat embed_gate(const Gate &g, int width, int q);

double operator_norm(const Mat &m);
double distance_up_to_phase(const Mat &a, const Mat &b);
bool is_unitary(const Mat &m, double tol = 1e-10);

Mat kron(const Mat &a, const Mat &b);

}  // namespace latcirc

#endif

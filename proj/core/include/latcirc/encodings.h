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

#ifndef LATCIRC_ENCODINGS_H
#define LATCIRC_ENCODINGS_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latcirc/common.h"

namespace latcirc {

enum class EncodingKind { SixVertexHeisenberg, PottsQutrit, LgtFourQubit };

// Physical images of the logical basis states. `one` is empty when the
// encoding only fixes |0>_L.
struct LogicalEncoding {
    EncodingKind kind = EncodingKind::PottsQutrit;
    std::string name;
    int q = 2;
    int physical_per_logical = 1;
    Vec zero;
    Vec one;
};

LogicalEncoding six_vertex_encoding();
LogicalEncoding potts_encoding();
LogicalEncoding lgt_encoding();

// Embeds a k-qubit logical vector (qubit 0 most significant) block by block.
Vec embed(const LogicalEncoding &enc, const Vec &logical);

// ---- six-vertex ----

struct SixVertexGates {
    Mat U;
    Mat V;
};

// Gate matrices indexed [ij][kl] with (k,l) the input legs.
SixVertexGates six_vertex_gates(double t);
Mat heisenberg_exchange();  // XX + YY + ZZ
bool is_six_vertex_form(const Mat &g, double tol = 0.0);

// ---- Ising ----

struct IsingGateSet {
    Mat W_h;
    Mat W_h_bar;
    Mat W_v;
    Mat V;
    Mat V_half;
    Mat K;
    Mat T;
    Mat T2_Wv_T2;  // (T x T) W_v (T x T)
};

const IsingGateSet &ising_gate_set();
Mat ising_composite_h();  // Z K Z K Z K^dag K^dag Z
Mat ising_composite_p();  // K Z K^dag Z K^dag Z K

struct InversePower {
    long m = 0;
    double distance = 0.0;
};

// Smallest m <= cap with distance_up_to_phase(gate^m, gate^dag) < delta.
InversePower find_inverse_power(const Mat &gate, double delta, long cap = 1000000);

// ---- recipes ----

enum class PhysKind {
    Horizontal,  // Potts single-qutrit edge gate (mu on the diagonal, nu off it)
    Pin,         // Potts edge to an auxiliary qutrit fixed to aux_value
    Vertical,    // Potts two-qutrit diagonal gate
    Temporal,    // LGT temporal face: [[1,e],[e,1]] with e = e^{beta J}
    Face,        // LGT spatial face: e^{beta J} on odd parity of its four spins
    Reset,       // LGT gauge-fixed spatial edge: projection onto |aux_value>
};

const char *phys_kind_name(PhysKind k);

struct PhysOp {
    PhysKind kind = PhysKind::Horizontal;
    std::vector<int> targets;
    cplx mu{1.0, 0.0};  // Potts mu, or LGT e^{beta J}
    cplx nu{1.0, 0.0};
    int aux_value = 0;
    int aux_id = -1;              // Pin: unique auxiliary qudit
    std::vector<int> aux_fixed;   // Face: values of the non-simulated edges
    int step = 0;
    std::string note;

    Mat matrix(int q) const;  // acts on `targets`
};

struct GateRecipe {
    std::string name;
    LogicalEncoding encoding;
    int logical_qubits = 1;
    int width = 0;  // simulated physical qudits
    std::vector<std::vector<int>> inputs;   // per logical qubit
    std::vector<std::vector<int>> outputs;  // per logical qubit
    std::vector<int> init;      // initial digit of each non-input qudit
    std::vector<int> readout;   // final bra digit of each non-output qudit
    std::vector<PhysOp> steps;
    Mat ideal;
    cplx normalization{1.0, 0.0};
    std::optional<double> epsilon;  // filter or leak parameter
    std::map<std::string, double> metadata;
};

// Runs the physical sequence on the encoded input; returns the unnormalized
// state of the output qudits (the other qudits contracted with `readout`).
Vec execute_recipe(const GateRecipe &r, const Vec &logical_in);
// normalization * embed(ideal * logical_in) on the output qudits.
Vec expected_output(const GateRecipe &r, const Vec &logical_in);
// Fails with InvalidConfig when an auxiliary is listed twice.
void check_auxiliaries(const GateRecipe &r);

// Potts (q = 3). Logical qubit k uses qutrits 2k (upper) and 2k+1 (lower).
GateRecipe potts_I1();
GateRecipe potts_P();
GateRecipe potts_H(double epsilon);
GateRecipe potts_I2();
GateRecipe potts_CZ();
std::vector<GateRecipe> potts_logical_gates(double epsilon = 1e-3);

// LGT. A logical qubit is four parallel edges; faces carry e^{beta J} on odd
// parity, so e^{beta J} = 0 projects onto even parity.
GateRecipe lgt_Rz(double xi);
GateRecipe lgt_diag();
GateRecipe lgt_teleport_H(double alpha);
GateRecipe lgt_I1(double zeta);
std::vector<GateRecipe> lgt_logical_gates(double zeta = 1e-3);

Mat rz(double xi);  // diag(1, e^{i xi})

struct RecipeReport {
    std::string name;
    int trials = 0;
    double max_distance = 0.0;
    std::optional<double> fitted_slope;
    std::vector<std::pair<double, double>> scan;  // (epsilon, distance)
    bool pass = false;
    std::vector<std::string> failures;
};

// Max distance over `trials` random logical inputs plus the basis states.
RecipeReport verify_recipe(const GateRecipe &r, int trials, uint64_t seed = 1, double tol = 1e-12);
// Log-log slope of the Potts H error over the given epsilons.
RecipeReport verify_potts_h_scaling(const std::vector<double> &epsilons, int trials, uint64_t seed = 1);

// ---- whitelists ----

bool potts_value_allowed(cplx mu, cplx nu, double epsilon, double tol = 1e-12);
bool lgt_value_allowed(cplx e, double zeta, double tol = 1e-12);
bool ising_value_allowed(cplx e, double tol = 1e-12);  // e^{beta J} = i or e^{beta h} = e^{i pi/4}
// Every physical gate parameter of the recipe is whitelisted.
bool recipe_whitelisted(const GateRecipe &r);

// ---- logical decompositions ----

struct EulerAngles {
    double gamma = 0.0;
    double beta = 0.0;
    double alpha = 0.0;
    double phase = 0.0;
};

// U = e^{i phase} Rz(gamma) H Rz(beta) H Rz(alpha).
EulerAngles euler_angles(const Mat &u);
Mat euler_compose(const EulerAngles &e);
Mat logical_cz();
// Rz(-pi/2) x Rz(-pi/2) diag(1,i,i,1).
Mat cz_from_diag();

}  // namespace latcirc

#endif

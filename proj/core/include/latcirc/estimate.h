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

#ifndef LATCIRC_ESTIMATE_H
#define LATCIRC_ESTIMATE_H

#include <cstdint>
#include <string>

#include "latcirc/qcirc.h"

namespace latcirc {

struct EstimatorConfig {
    uint64_t shots = 0;  // per part (Re and Im); 0 sizes from epsilon and delta
    double epsilon = 0.05;
    double delta = 0.01;
    uint64_t seed = 0;
};

struct Estimate {
    cplx value{0.0, 0.0};
    double epsilon = 0.0;
    uint64_t shots_used = 0;  // total over both parts
    double p0_re = 0.0;
    double p0_im = 0.0;
};

// ceil(2 ln(4/delta) / epsilon^2): Hoeffding for each part at delta/2.
uint64_t auto_shots(double epsilon, double delta);

// Samples the ancilla of the Hadamard test for c = <left|U|right>:
// P(0) = (1 + Re c)/2 without, and (1 - Im c)/2 with, the phase gate.
Estimate hadamard_test(const Circuit &circuit, const ProductState &left, const ProductState &right,
                       const EstimatorConfig &cfg);

// Normalized trace q^-n Tr(U): every shot draws a uniform basis state s and
// samples the Hadamard test for <s|U|s>.
Estimate dqc1_trace_estimate(const Circuit &circuit, const EstimatorConfig &cfg);

// Exact ancilla P(0) from the explicit construction: ancilla H, optional
// phase gate, controlled (W_L^dag U W_R) with W_L|0> = |left>, W_R|0> = |right>,
// then H. Dense; intended for small widths.
double controlled_u_p0(const Circuit &circuit, const ProductState &left, const ProductState &right,
                       bool phase_gate);

// The generator behind every sampled shot.
std::string rng_description();

}  // namespace latcirc

#endif

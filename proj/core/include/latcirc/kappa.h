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

#ifndef LATCIRC_KAPPA_H
#define LATCIRC_KAPPA_H

#include <string>

#include "latcirc/common.h"

namespace latcirc {

// Normalization constant kept as sqrt(2)^half_pow2 * q^pow_q * residual so
// that powers of two stay exact.
struct Kappa {
    int half_pow2 = 0;
    int q = 2;
    int pow_q = 0;
    cplx residual{1.0, 0.0};

    static Kappa pow2_halves(int h);
    static Kappa q_power(int q, int k);
    static Kappa scalar(cplx c);

    cplx value() const;
    Kappa &operator*=(const Kappa &other);
    friend Kappa operator*(Kappa a, const Kappa &b) {
        a *= b;
        return a;
    }
    bool same_exponents(const Kappa &other) const;
    std::string describe() const;
};

}  // namespace latcirc

#endif

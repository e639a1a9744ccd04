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

#include "latcirc/kappa.h"

#include <cmath>
#include <sstream>

namespace latcirc {

Kappa Kappa::pow2_halves(int h) {
    Kappa k;
    k.half_pow2 = h;
    return k;
}

Kappa Kappa::q_power(int q, int p) {
    Kappa k;
    k.q = q;
    k.pow_q = p;
    return k;
}

Kappa Kappa::scalar(cplx c) {
    Kappa k;
    k.residual = c;
    return k;
}

cplx Kappa::value() const {
    double m = std::ldexp(1.0, half_pow2 / 2);
    if (half_pow2 % 2 != 0) {
        m *= half_pow2 > 0 ? std::sqrt(2.0) : 1.0 / std::sqrt(2.0);
    }
    m *= std::pow(static_cast<double>(q), pow_q);
    return m * residual;
}

Kappa &Kappa::operator*=(const Kappa &other) {
    half_pow2 += other.half_pow2;
    if (other.pow_q != 0) {
        if (pow_q == 0) {
            q = other.q;
            pow_q = other.pow_q;
        } else if (q == other.q) {
            pow_q += other.pow_q;
        } else {
            residual *= std::pow(static_cast<double>(other.q), other.pow_q);
        }
    }
    residual *= other.residual;
    return *this;
}

bool Kappa::same_exponents(const Kappa &other) const {
    return half_pow2 == other.half_pow2 && (pow_q == 0 ? other.pow_q == 0 : (q == other.q && pow_q == other.pow_q));
}

std::string Kappa::describe() const {
    std::ostringstream out;
    out << "2^(" << half_pow2 << "/2)";
    if (pow_q != 0) {
        out << " * " << q << "^" << pow_q;
    }
    out << " * (" << residual.real() << (residual.imag() < 0 ? "" : "+") << residual.imag() << "i)";
    return out.str();
}

}  // namespace latcirc

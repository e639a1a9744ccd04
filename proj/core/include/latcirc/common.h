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

#ifndef LATCIRC_COMMON_H
#define LATCIRC_COMMON_H

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace latcirc {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

enum class ErrorKind {
    EnumerationTooLarge,
    InvalidConfig,
    DimensionMismatch,
    MalformedGeometry,
    GaugeLoop,
    UnsupportedFace,
    SearchExhausted,
    BadEpsilon,
    BadParameter,
    UnsupportedGate,
    NotSixVertexForm,
    WidthExceeded,
    BlockBudget,
    NonUnitaryCircuit,
    BadConfig,
    Schema,
};

const char *error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what);
    ErrorKind kind() const { return kind_; }

   private:
    ErrorKind kind_;
};

// Integer power for small bases; throws on overflow of 64 bits.
uint64_t ipow(uint64_t base, unsigned exp);

}  // namespace latcirc

#endif

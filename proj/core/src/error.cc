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

#include "latcirc/common.h"

namespace latcirc {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::MalformedGeometry: return "MalformedGeometry";
        case ErrorKind::GaugeLoop: return "GaugeLoop";
        case ErrorKind::UnsupportedFace: return "UnsupportedFace";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::BadEpsilon: return "BadEpsilon";
        case ErrorKind::BadParameter: return "BadParameter";
        case ErrorKind::UnsupportedGate: return "UnsupportedGate";
        case ErrorKind::NotSixVertexForm: return "NotSixVertexForm";
        case ErrorKind::WidthExceeded: return "WidthExceeded";
        case ErrorKind::BlockBudget: return "BlockBudget";
        case ErrorKind::NonUnitaryCircuit: return "NonUnitaryCircuit";
        case ErrorKind::BadConfig: return "BadConfig";
        case ErrorKind::Schema: return "Schema";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {
}

uint64_t ipow(uint64_t base, unsigned exp) {
    uint64_t r = 1;
    for (unsigned k = 0; k < exp; k++) {
        if (base != 0 && r > UINT64_MAX / base) {
            throw Error(ErrorKind::EnumerationTooLarge, "integer power overflows");
        }
        r *= base;
    }
    return r;
}

}  // namespace latcirc

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

#ifndef LATCIRC_IO_H
#define LATCIRC_IO_H

#include <string>

#include "json.hpp"
#include "latcirc/compile.h"
#include "latcirc/estimate.h"
#include "latcirc/map.h"

namespace latcirc::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Complex numbers are [re, im] arrays throughout.
json to_json(cplx c);
cplx complex_from_json(const json &j);
json to_json(const Mat &m);
Mat matrix_from_json(const json &j);
json to_json(const Kappa &k);
Kappa kappa_from_json(const json &j);
json to_json(const ProductState &s);
ProductState product_from_json(const json &j, int q);

// Documents carry "latcirc_schema": 1 and a "kind" tag
// (model, circuit, mapped, logical, compiled).
json model_to_json(const LatticeModel &m);
LatticeModel model_from_json(const json &j);
json circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const json &j);
json mapped_to_json(const MappedCircuit &mc);
MappedCircuit mapped_from_json(const json &j);
json logical_to_json(const LogicalCircuit &c);
LogicalCircuit logical_from_json(const json &j);
json compiled_to_json(const CompiledInstance &ci);
CompiledInstance compiled_from_json(const json &j);
json audit_to_json(const CompiledInstance &ci);
json estimate_to_json(const Estimate &e);

// Throws Schema unless j is an object with the supported schema version.
void check_schema(const json &j);
std::string kind_of(const json &j);

// "-" reads stdin. Parse failures and version mismatches throw Schema.
json read_document(const std::string &path);
// Stable text form: two-space indent, sorted keys, trailing newline.
std::string dump(const json &j);

}  // namespace latcirc::io

#endif

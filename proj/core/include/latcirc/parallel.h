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

#ifndef LATCIRC_PARALLEL_H
#define LATCIRC_PARALLEL_H

#include <cstddef>
#include <functional>

namespace latcirc {

// Worker count: LATCIRC_THREADS if set and positive, else hardware concurrency.
int worker_count();

// Runs body(i) for i in [0, n) across workers. Each index is handled exactly
// once; callers write into per-index slots so results never depend on the
// schedule.
void parallel_for(size_t n, const std::function<void(size_t)> &body);

}  // namespace latcirc

#endif

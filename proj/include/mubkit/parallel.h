// Copyright 2026 The mubkit Authors
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

#ifndef MUBKIT_PARALLEL_H
#define MUBKIT_PARALLEL_H

#include <cstddef>
#include <functional>

namespace mubkit {

/// Worker count: MUBKIT_THREADS when set to a positive integer, else hardware concurrency.
size_t max_threads();

/// Runs body(i) for i in [0, n). Each index runs exactly once; callers write
/// results into per-index slots so the outcome does not depend on scheduling.
void parallel_for(size_t n, const std::function<void(size_t)> &body);

}  // namespace mubkit

#endif

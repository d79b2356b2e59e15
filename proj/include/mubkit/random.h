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

#ifndef MUBKIT_RANDOM_H
#define MUBKIT_RANDOM_H

#include <cstdint>
#include <random>

#include "mubkit/linalg.h"

namespace mubkit {

using Rng = std::mt19937_64;

/// Haar-distributed pure state (normalized complex Gaussian vector).
StateVector random_state(size_t d, Rng &rng);

/// Random Hermitian matrix with Gaussian entries.
Matrix random_hermitian(size_t d, Rng &rng);

/// exp(iH) for a random Hermitian generator H.
Operator random_unitary(size_t d, Rng &rng);

}  // namespace mubkit

#endif

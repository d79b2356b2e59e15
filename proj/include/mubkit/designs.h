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

#ifndef MUBKIT_DESIGNS_H
#define MUBKIT_DESIGNS_H

#include "mubkit/linalg.h"
#include "mubkit/mubs.h"

namespace mubkit {

/// Entrywise max distance between the average of (|b><b|)^{(x)2} over all
/// vectors of the set and Pi_+ / (d(d+1)/2). Zero iff the vectors form a 2-design.
double two_design_defect(const MubSet &set);

/// sum over bases and vectors of |<b|psi>|^4.
double fourth_moment(const MubSet &set, const StateVector &psi);

}  // namespace mubkit

#endif

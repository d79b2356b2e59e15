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

#ifndef MUBKIT_ACCEPTANCE_H
#define MUBKIT_ACCEPTANCE_H

#include <cstdint>
#include <string>
#include <vector>

namespace mubkit {

struct CriterionResult {
    int id = 0;
    std::string name;
    std::string claim;  // the result being reproduced
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    uint64_t seed = 20070101;
    int restarts = 32;
};

/// Runs one reproduction criterion (1..11).
CriterionResult run_criterion(int id, const AcceptanceOptions &options = {});

/// Runs criteria 1..11 in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options = {});

inline constexpr int kCriterionCount = 11;

}  // namespace mubkit

#endif

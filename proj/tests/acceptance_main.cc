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

// Runs the reproduction criteria and prints one line per criterion.

#include <cstdio>

#include "mubkit/acceptance.h"

int main() {
    int failed = 0;
    for (int id = 1; id <= mubkit::kCriterionCount; id++) {
        mubkit::CriterionResult r = mubkit::run_criterion(id);
        std::printf("[%s] %2d %-28s %6.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) failed++;
    }
    std::printf("%d/%d criteria passed\n", mubkit::kCriterionCount - failed, mubkit::kCriterionCount);
    return failed == 0 ? 0 : 1;
}

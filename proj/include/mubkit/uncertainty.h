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

#ifndef MUBKIT_UNCERTAINTY_H
#define MUBKIT_UNCERTAINTY_H

#include <cstdint>
#include <optional>
#include <string>

#include "mubkit/linalg.h"
#include "mubkit/mubs.h"

namespace mubkit {

inline constexpr double TOL_OPT = 1e-9;

/// (1/sqrt s) sum_k |k k>.
StateVector maximally_entangled(size_t s);

/// Known minimizer of the average entropy: the maximally entangled state for
/// product sets and |1,1> for Latin-square sets. Empty for other families.
std::optional<StateVector> witness_state(const MubSet &set);

/// || (U (x) conj U)|psi_me> - |psi_me> || for the maximally entangled psi_me.
double entangled_invariance_check(const Operator &u);

/// f(x) = (1/m) sum_t sum_k h(|<b^t_k|x>|^2) with h(p) = -p log2 p, evaluated
/// without normalizing x. Terms with p < 1e-15 contribute 0.
double avg_entropy_value(const MubSet &set, const Vector &x);

/// Gradient of avg_entropy_value in the 2d real coordinates of x, packed as a
/// complex vector G with df = Re <G, dx>. Terms with p < 1e-12 are dropped.
Vector avg_entropy_gradient(const MubSet &set, const Vector &x);

struct MinimizeOptions {
    int restarts = 64;
    uint64_t seed = 0;
    double tol = 1e-7;
    int max_iterations = 5000;
};

struct MinimizationResult {
    double best_value = 0;
    StateVector best_state = StateVector::basis(1, 0);
    int restarts_used = 0;
    bool converged = false;
    double gradient_norm_at_solution = 0;
    std::optional<std::string> witness_match;
    /// -1 when the witness state won, otherwise the restart index.
    int best_candidate = -1;
};

/// Projected gradient descent on the unit sphere from `restarts` random starts
/// (restart r draws from seed + r) plus the witness state when one exists.
/// Backtracking line search halves the step until the Armijo condition with
/// constant 1e-4 holds. Deterministic for a given seed.
MinimizationResult minimize_avg_entropy(const MubSet &set, const MinimizeOptions &options = {});

struct TightnessCertificate {
    double lower_bound = 0;  // (log2 d) / 2
    double achieved = 0;
    double gap = 0;
    bool tight = false;
    double tol_cert = 0;
    /// log2((d+1)/2), present when the set has d + 1 bases.
    std::optional<double> full_set_bound;
};

TightnessCertificate certify_tightness(const MubSet &set, const MinimizationResult &result, double tol_cert = 1e-5);

}  // namespace mubkit

#endif

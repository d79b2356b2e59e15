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

#ifndef MUBKIT_ENTROPY_H
#define MUBKIT_ENTROPY_H

#include <span>
#include <vector>

#include "mubkit/linalg.h"
#include "mubkit/mubs.h"

namespace mubkit {

/// Probabilities below this are exact zeros in every entropy sum.
inline constexpr double PROB_FLOOR = 1e-15;

/// Outcome probabilities of a d-outcome measurement.
class OutcomeDistribution {
   public:
    /// Throws std::invalid_argument unless entries lie in [0, 1] and sum to 1 within TOL_NORM.
    explicit OutcomeDistribution(std::vector<double> probabilities);

    size_t size() const { return p_.size(); }
    double operator[](size_t k) const { return p_[k]; }
    const std::vector<double> &probabilities() const { return p_; }

   private:
    std::vector<double> p_;
};

/// -sum p log2 p with 0 log 0 = 0.
double shannon(std::span<const double> p);
/// -log2 sum p^2.
double renyi2(std::span<const double> p);

/// p_k = |<b_k|psi>|^2, renormalized when the total drifts by at most TOL_NORM.
OutcomeDistribution measure_distribution(const Basis &basis, const StateVector &psi);
double shannon_entropy(const Basis &basis, const StateVector &psi);
double renyi2_entropy(const Basis &basis, const StateVector &psi);

enum class EntropyKind { shannon, renyi2 };

/// Mean over the set's bases.
double avg_entropy(const MubSet &set, const StateVector &psi, EntropyKind kind = EntropyKind::shannon);

/// -log2 of the largest overlap modulus between the two bases.
double maassen_uffink_bound(const Basis &b1, const Basis &b2);

/// log2((d + 1) / 2), the bound for a complete set of d + 1 bases.
double full_set_bound(int d);

}  // namespace mubkit

#endif

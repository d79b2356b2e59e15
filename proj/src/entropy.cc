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

#include "mubkit/entropy.h"

#include <cmath>
#include <stdexcept>

namespace mubkit {

OutcomeDistribution::OutcomeDistribution(std::vector<double> probabilities) : p_(std::move(probabilities)) {
    double total = 0;
    for (double v : p_) {
        if (!std::isfinite(v) || v < -TOL_NORM || v > 1 + TOL_NORM) {
            throw std::invalid_argument("OutcomeDistribution: probability outside [0, 1]");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > TOL_NORM) {
        throw std::invalid_argument("OutcomeDistribution: probabilities do not sum to 1");
    }
}

double shannon(std::span<const double> p) {
    double h = 0;
    for (double v : p) {
        if (v >= PROB_FLOOR) {
            h -= v * std::log2(v);
        }
    }
    return h;
}

double renyi2(std::span<const double> p) {
    double s = 0;
    for (double v : p) {
        if (v >= PROB_FLOOR) {
            s += v * v;
        }
    }
    return -std::log2(s);
}

OutcomeDistribution measure_distribution(const Basis &basis, const StateVector &psi) {
    if (basis.dim() != psi.dim()) {
        throw std::invalid_argument("measure_distribution: dimension mismatch");
    }
    Vector c = basis.unitary().adjoint() * psi.amplitudes();
    std::vector<double> p(psi.dim());
    double total = 0;
    for (size_t k = 0; k < p.size(); k++) {
        p[k] = std::norm(c(static_cast<Eigen::Index>(k)));
        total += p[k];
    }
    if (std::abs(total - 1.0) > TOL_NORM) {
        throw std::invalid_argument("measure_distribution: probabilities drift from 1 by more than TOL_NORM");
    }
    for (double &v : p) {
        v /= total;
    }
    return OutcomeDistribution(std::move(p));
}

double shannon_entropy(const Basis &basis, const StateVector &psi) {
    return shannon(measure_distribution(basis, psi).probabilities());
}

double renyi2_entropy(const Basis &basis, const StateVector &psi) {
    return renyi2(measure_distribution(basis, psi).probabilities());
}

double avg_entropy(const MubSet &set, const StateVector &psi, EntropyKind kind) {
    double sum = 0;
    for (const auto &b : set.bases()) {
        sum += kind == EntropyKind::shannon ? shannon_entropy(b, psi) : renyi2_entropy(b, psi);
    }
    return sum / static_cast<double>(set.size());
}

double maassen_uffink_bound(const Basis &b1, const Basis &b2) {
    if (b1.dim() != b2.dim()) {
        throw std::invalid_argument("maassen_uffink_bound: dimension mismatch");
    }
    Matrix g = b1.unitary().adjoint() * b2.unitary();
    double c = 0;
    for (Eigen::Index i = 0; i < g.size(); i++) {
        c = std::max(c, std::abs(g.data()[i]));
    }
    // c <= 1 up to rounding; clamp so identical bases give exactly 0.
    return c >= 1.0 ? 0.0 : -std::log2(c);
}

double full_set_bound(int d) {
    if (d < 2) {
        throw std::invalid_argument("full_set_bound: d must be at least 2");
    }
    return std::log2((d + 1) / 2.0);
}

}  // namespace mubkit

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

#include "mubkit/uncertainty.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mubkit/entropy.h"
#include "mubkit/parallel.h"
#include "mubkit/random.h"

namespace mubkit {

namespace {

constexpr double kGradientFloor = 1e-12;
constexpr double kArmijo = 1e-4;

size_t exact_sqrt(size_t d) {
    auto r = static_cast<size_t>(std::llround(std::sqrt(static_cast<double>(d))));
    return r * r == d ? r : 0;
}

Vector tangent(const Vector &psi, const Vector &g) {
    return g - psi.dot(g).real() * psi;
}

struct Candidate {
    double value = 0;
    Vector state;
    bool converged = false;
    double gradient_norm = 0;
};

Candidate descend(const MubSet &set, Vector psi, const MinimizeOptions &opt) {
    psi.normalize();
    double f = avg_entropy_value(set, psi);
    double step = 1.0;
    Candidate c;
    for (int it = 0; it < opt.max_iterations; it++) {
        Vector g = tangent(psi, avg_entropy_gradient(set, psi));
        double gn = g.norm();
        c.gradient_norm = gn;
        if (gn <= opt.tol) {
            c.converged = true;
            break;
        }
        double trial = std::min(2.0 * step, 1e3);
        bool accepted = false;
        while (trial > 1e-20) {
            Vector next = (psi - trial * g).normalized();
            double fn = avg_entropy_value(set, next);
            if (fn <= f - kArmijo * trial * gn * gn) {
                psi = std::move(next);
                f = fn;
                step = trial;
                accepted = true;
                break;
            }
            trial /= 2;
        }
        if (!accepted) {
            break;
        }
    }
    c.value = f;
    c.state = std::move(psi);
    return c;
}

}  // namespace

StateVector maximally_entangled(size_t s) {
    if (s < 1) {
        throw std::invalid_argument("maximally_entangled: s must be positive");
    }
    auto n = static_cast<Eigen::Index>(s);
    Vector v = Vector::Zero(n * n);
    for (Eigen::Index k = 0; k < n; k++) {
        v(k * n + k) = 1.0 / std::sqrt(static_cast<double>(s));
    }
    return StateVector(std::move(v));
}

std::optional<StateVector> witness_state(const MubSet &set) {
    switch (set.family()) {
        case Family::product:
            if (size_t s = exact_sqrt(set.dim()); s > 0) {
                return maximally_entangled(s);
            }
            return std::nullopt;
        case Family::latin_square:
            return StateVector::basis(set.dim(), 0);
        default:
            return std::nullopt;
    }
}

double entangled_invariance_check(const Operator &u) {
    if (!u.is_square() || !is_unitary(u, 1e-9)) {
        throw std::invalid_argument("entangled_invariance_check: input is not unitary");
    }
    StateVector me = maximally_entangled(u.dim_in());
    Vector moved = tensor(u, u.conjugate()).apply(me);
    return (moved - me.amplitudes()).norm();
}

double avg_entropy_value(const MubSet &set, const Vector &x) {
    if (static_cast<size_t>(x.size()) != set.dim()) {
        throw std::invalid_argument("avg_entropy_value: dimension mismatch");
    }
    double total = 0;
    for (const auto &b : set.bases()) {
        Vector c = b.unitary().adjoint() * x;
        for (Eigen::Index k = 0; k < c.size(); k++) {
            double p = std::norm(c(k));
            if (p >= PROB_FLOOR) {
                total -= p * std::log2(p);
            }
        }
    }
    return total / static_cast<double>(set.size());
}

Vector avg_entropy_gradient(const MubSet &set, const Vector &x) {
    if (static_cast<size_t>(x.size()) != set.dim()) {
        throw std::invalid_argument("avg_entropy_gradient: dimension mismatch");
    }
    Vector g = Vector::Zero(x.size());
    for (const auto &b : set.bases()) {
        Vector c = b.unitary().adjoint() * x;
        for (Eigen::Index k = 0; k < c.size(); k++) {
            double p = std::norm(c(k));
            // d/dp (-p log2 p) times dp/dx = 2 c b
            c(k) *= p < kGradientFloor ? 0.0 : -2.0 * (std::log2(p) + 1.0 / std::numbers::ln2);
        }
        g += b.unitary() * c;
    }
    return g / static_cast<double>(set.size());
}

MinimizationResult minimize_avg_entropy(const MubSet &set, const MinimizeOptions &options) {
    if (options.restarts < 1) {
        throw std::invalid_argument("minimize_avg_entropy: restarts must be at least 1");
    }
    std::vector<Candidate> runs(static_cast<size_t>(options.restarts));
    parallel_for(runs.size(), [&](size_t r) {
        Rng rng(options.seed + r);
        runs[r] = descend(set, random_state(set.dim(), rng).amplitudes(), options);
    });

    MinimizationResult out;
    out.restarts_used = options.restarts;
    const Candidate *best = nullptr;
    std::optional<Candidate> witness;
    if (auto w = witness_state(set)) {
        Candidate c;
        c.state = w->amplitudes();
        c.value = avg_entropy_value(set, c.state);
        c.gradient_norm = tangent(c.state, avg_entropy_gradient(set, c.state)).norm();
        c.converged = c.gradient_norm <= options.tol;
        witness = c;
        best = &*witness;
    }
    for (size_t r = 0; r < runs.size(); r++) {
        if (best == nullptr || runs[r].value < best->value) {
            best = &runs[r];
            out.best_candidate = static_cast<int>(r);
        }
    }
    out.best_value = best->value;
    out.best_state = StateVector::normalized(phase_normalized(best->state));
    out.converged = best->converged;
    out.gradient_norm_at_solution = best->gradient_norm;
    if (witness && witness->value - out.best_value <= 1e-6) {
        out.witness_match = set.family() == Family::product ? "maximally_entangled" : "|1,1>";
    }
    return out;
}

TightnessCertificate certify_tightness(const MubSet &set, const MinimizationResult &result, double tol_cert) {
    if (result.best_state.dim() != set.dim()) {
        throw std::invalid_argument("certify_tightness: result does not belong to this set");
    }
    TightnessCertificate c;
    c.lower_bound = std::log2(static_cast<double>(set.dim())) / 2.0;
    c.achieved = result.best_value;
    c.gap = c.achieved - c.lower_bound;
    c.tol_cert = tol_cert;
    c.tight = c.gap <= tol_cert;
    if (set.size() == set.dim() + 1) {
        c.full_set_bound = full_set_bound(static_cast<int>(set.dim()));
    }
    return c;
}

}  // namespace mubkit

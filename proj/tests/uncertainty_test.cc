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

#include <gtest/gtest.h>

#include <cmath>

#include "mubkit/entropy.h"
#include "mubkit/random.h"
#include "oracle.h"

using namespace mubkit;

TEST(Witness, maximally_entangled_is_invariant_under_u_conj_u) {
    Rng rng(23);
    for (size_t s : {2, 3, 4}) {
        StateVector me = maximally_entangled(s);
        for (size_t k = 0; k < s; k++) EXPECT_NEAR(std::abs(me[k * s + k] - 1 / std::sqrt(double(s))), 0, 1e-15);
        for (int i = 0; i < 5; i++) EXPECT_LE(entangled_invariance_check(random_unitary(s, rng)), 1e-12);
    }
}

TEST(Witness, by_family) {
    EXPECT_TRUE(witness_state(product_mubs(qubit_triple(1))));
    auto l = witness_state(latin_square_mubs(3));
    ASSERT_TRUE(l);
    EXPECT_EQ((*l)[0], Complex(1, 0));
    EXPECT_FALSE(witness_state(prime_mubs(3)));
}

TEST(Objective, value_matches_entropy_for_unit_vectors) {
    Rng rng(29);
    MubSet s = prime_mubs(5);
    StateVector psi = random_state(5, rng);
    EXPECT_NEAR(avg_entropy_value(s, psi.amplitudes()), avg_entropy(s, psi), 1e-13);
}

TEST(Objective, gradient_matches_central_differences) {
    Rng rng(31);
    const double h = 1e-5;
    for (const MubSet &s : {prime_mubs(3), qubit_triple(2), latin_square_mubs(2), product_mubs(prime_mubs(2))}) {
        for (int i = 0; i < 5; i++) {
            Vector x = random_state(s.dim(), rng).amplitudes();
            Vector g = avg_entropy_gradient(s, x);
            for (Eigen::Index k = 0; k < x.size(); k++) {
                for (Complex dir : {Complex(1, 0), Complex(0, 1)}) {
                    Vector e = Vector::Zero(x.size());
                    e(k) = h * dir;
                    double fd = (avg_entropy_value(s, x + e) - avg_entropy_value(s, x - e)) / (2 * h);
                    double an = (std::conj(g(k)) * dir).real();
                    EXPECT_NEAR(an, fd, 1e-5 * std::max(1.0, g.norm()));
                }
            }
        }
    }
}

TEST(Minimize, reaches_bounds) {
    MinimizationResult r = minimize_avg_entropy(qubit_triple(2), {16, 1});
    EXPECT_NEAR(r.best_value, 1.0, 1e-6);

    MubSet full = prime_mubs(3);
    MinimizationResult f = minimize_avg_entropy(full, {16, 1});
    EXPECT_GE(f.best_value, full_set_bound(3) - 1e-9);
    TightnessCertificate c = certify_tightness(full, f);
    EXPECT_FALSE(c.tight);  // full set sits above (log2 3)/2
    ASSERT_TRUE(c.full_set_bound);
    EXPECT_NEAR(*c.full_set_bound, 1.0, 1e-15);
}

TEST(Minimize, witness_reported_for_latin) {
    MubSet s = latin_square_mubs(3);
    MinimizationResult r = minimize_avg_entropy(s, {4, 0});
    EXPECT_NEAR(r.best_value, std::log2(3.0), 1e-9);
    EXPECT_EQ(r.witness_match, "|1,1>");
    EXPECT_TRUE(certify_tightness(s, r).tight);
}

TEST(Minimize, deterministic_for_seed) {
    MubSet s = prime_mubs(5).take(3);
    MinimizationResult a = minimize_avg_entropy(s, {6, 42});
    MinimizationResult b = minimize_avg_entropy(s, {6, 42});
    EXPECT_EQ(a.best_value, b.best_value);
    EXPECT_EQ(a.best_candidate, b.best_candidate);
    EXPECT_GE(a.best_value, std::log2(5.0) / 2 - 1e-9);
}

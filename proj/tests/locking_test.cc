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

#include "mubkit/locking.h"

#include <gtest/gtest.h>

#include <cmath>

#include "oracle.h"

using namespace mubkit;

namespace {

double naive_mi(const Ensemble &e, const Povm &m) {
    Matrix states = e.states();
    std::vector<std::vector<double>> joint(e.size(), std::vector<double>(m.size()));
    for (size_t x = 0; x < e.size(); x++) {
        double px = e.prior.weights()[x];
        for (size_t i = 0; i < m.size(); i++)
            joint[x][i] = px * m.weights()[i] * oracle::overlap2(m.vectors(), int(i), states.col(x));
    }
    return oracle::mutual_information(joint);
}

}  // namespace

TEST(Prior, construction_and_marginals) {
    Prior u = Prior::uniform(3, 4);
    EXPECT_TRUE(u.is_uniform());
    Prior p = Prior::from_basis_weights({0.2, 0.2, 0.6}, 4);
    EXPECT_FALSE(p.is_uniform());
    EXPECT_NEAR(p(2, 1), 0.15, 1e-15);
    EXPECT_NEAR(p.basis_marginal()[2], 0.6, 1e-15);
    EXPECT_THROW(Prior(2, 2, {0.5, 0.5, 0.5, 0.5}), std::invalid_argument);
    EXPECT_THROW(Prior(1, 2, {1.5, -0.5}), std::invalid_argument);
}

TEST(Prior, random_respects_cap) {
    Rng rng(37);
    for (int i = 0; i < 100; i++) {
        Prior p = random_prior(3, 4, rng, 0.5);
        double sum = 0;
        for (double w : p.basis_marginal()) {
            EXPECT_LE(w, 0.5);
            sum += w;
        }
        EXPECT_NEAR(sum, 1.0, 1e-12);
    }
}

TEST(Povm, validation) {
    EXPECT_THROW(Povm({1.0, 1.0}, Matrix::Identity(2, 2) * 0.5), std::invalid_argument);
    Povm b = Povm::from_basis(Basis::computational(3));
    EXPECT_LE(b.completeness_defect(), 1e-15);
    EXPECT_NEAR(b.weight_sum(), 3.0, 1e-15);
}

TEST(Locking, bell_basis_columns) {
    Basis b = bell_basis(2);
    double r = 1 / std::sqrt(2.0);
    Matrix expected(4, 4);
    expected << r, r, 0, 0,  //
        0, 0, r, r,          //
        0, 0, r, -r,         //
        r, -r, 0, 0;
    EXPECT_LE(max_abs(b.unitary() - expected), 1e-15);
    EXPECT_THROW(bell_basis(3), std::invalid_argument);
    EXPECT_EQ(bell_basis(4).dim(), 16u);
}

TEST(Locking, mutual_information_matches_naive) {
    MubSet q = qubit_triple(2);
    Rng rng(41);
    for (int i = 0; i < 5; i++) {
        Ensemble e = build_locking_ensemble(q, random_prior(3, 4, rng));
        for (const Basis &b : {bell_basis(2), q.basis(0), q.basis(2)}) {
            Povm m = Povm::from_basis(b);
            EXPECT_NEAR(mutual_info_for_measurement(e, m), naive_mi(e, m), 1e-12);
        }
    }
    Ensemble u = build_locking_ensemble(q, Prior::uniform(3, 4));
    EXPECT_NEAR(mutual_info_for_measurement(u, Povm::from_basis(bell_basis(2))), 1.0, 1e-12);
}

TEST(Locking, threshold_prior_exceeds_half_n) {
    MubSet q = qubit_triple(2);
    for (double delta : {0.01, 0.1}) {
        double pt = 0.5 + delta;
        double rest = (1 - pt) / 2;
        Ensemble e = build_locking_ensemble(q, Prior::from_basis_weights({rest, rest, pt}, 4));
        double mi = mutual_info_for_measurement(e, Povm::from_basis(q.basis(2)));
        EXPECT_GE(mi, pt * 2 - 1e-12);
        EXPECT_GT(mi, 1.0);
    }
}

TEST(Locking, covariant_povm_from_bell_state) {
    // The 16 translates of a Bell vector are the 4 Bell vectors, each four times.
    StateVector bell(bell_basis(2).unitary().col(0));
    Povm m = covariant_povm_from_state(bell, 2, 2);
    EXPECT_EQ(m.size(), 16u);
    EXPECT_LE(m.completeness_defect(), 1e-12);
    EXPECT_NEAR(m.weight_sum(), 4.0, 1e-12);
    Matrix bb = bell_basis(2).unitary();
    for (size_t i = 0; i < m.size(); i++) {
        double best = 0;
        for (int k = 0; k < 4; k++) best = std::max(best, std::norm(bb.col(k).dot(m.vectors().col(i))));
        EXPECT_NEAR(best, 1.0, 1e-12);
    }
}

TEST(Locking, iacc_covariant_and_latin) {
    MubSet q = qubit_triple(2);
    AccessibleInfoResult r = iacc_covariant(q, minimize_avg_entropy(q, {8, 0}));
    EXPECT_NEAR(r.value, 1.0, 1e-6);
    EXPECT_EQ(r.kind, AccessKind::exact_covariant);
    ASSERT_TRUE(r.measurement_value);
    EXPECT_NEAR(*r.measurement_value, 1.0, 1e-6);

    AccessibleInfoResult l = iacc_latin(latin_square_mubs(5).take(3));
    EXPECT_NEAR(l.value, std::log2(5.0), 1e-12);
    EXPECT_THROW(iacc_latin(prime_mubs(3)), std::invalid_argument);
    EXPECT_THROW(iacc_covariant(latin_square_mubs(3), minimize_avg_entropy(latin_square_mubs(3), {1, 0})),
                 std::invalid_argument);
}

TEST(Locking, search_is_a_lower_bound) {
    MubSet q = qubit_triple(2);
    Ensemble e = build_locking_ensemble(q, Prior::from_basis_weights({0.2, 0.2, 0.6}, 4));
    Matrix best;
    AccessibleInfoResult r = iacc_lower_search(e, {16, 3}, &best);
    EXPECT_GE(r.value, 1.2 - 1e-4);
    ASSERT_EQ(best.rows(), 4);
    EXPECT_NEAR(mutual_info_for_measurement(e, Povm::from_basis(Basis(best, "M"))), r.value, 1e-12);
}

TEST(Locking, gap_and_unlocked) {
    MubSet q = qubit_triple(2);
    Ensemble u = build_locking_ensemble(q, Prior::uniform(3, 4));
    GapReport g = locking_gap(u);
    EXPECT_TRUE(g.exact);
    EXPECT_NEAR(g.gap1_bound, 1.0, 1e-9);
    ASSERT_TRUE(g.delta);
    EXPECT_NEAR(*g.delta, 1.0, 1e-6);
    EXPECT_NEAR(unlocked_info(u), 2 + std::log2(3.0), 1e-12);

    Ensemble p = build_locking_ensemble(q, Prior::from_basis_weights({0.3, 0.3, 0.4}, 4));
    EXPECT_THROW(unlocked_info(p), std::invalid_argument);
    EXPECT_LE(locking_gap(p).delta_upper_bound, 1.0 + 1e-9);
    EXPECT_THROW(locking_gap(build_locking_ensemble(prime_mubs(3), Prior::uniform(4, 3))), std::invalid_argument);
}

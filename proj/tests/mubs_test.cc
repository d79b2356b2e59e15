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

#include "mubkit/mubs.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle.h"

using namespace mubkit;

namespace {

const double kPi = std::numbers::pi;

/// Largest | |<a_k|b_l>|^2 - 1/d | over all vector pairs, computed entry by entry.
double naive_deviation(const Basis &a, const Basis &b) {
    double worst = 0;
    double d = double(a.dim());
    for (size_t k = 0; k < a.dim(); k++)
        for (size_t l = 0; l < b.dim(); l++)
            worst = std::max(worst, std::abs(oracle::overlap2(a.unitary(), int(k), b.unitary().col(l)) - 1 / d));
    return worst;
}

/// Same column up to a global phase.
bool same_ray(const Vector &u, const Vector &v) { return std::abs(std::abs(u.dot(v)) - 1) < 1e-12; }

}  // namespace

TEST(Pauli, clock_and_shift_conventions) {
    Matrix x = pauli_x(3).matrix();
    Matrix z = pauli_z(3).matrix();
    Complex w = std::polar(1.0, 2 * kPi / 3);
    for (int k = 0; k < 3; k++) {
        EXPECT_NEAR(std::abs(x((k + 1) % 3, k) - 1.0), 0, 1e-15);
        // phases are 1-based: Z|k> = w^k for k = 1..d
        EXPECT_NEAR(std::abs(z(k, k) - std::pow(w, k + 1)), 0, 1e-14);
    }
    // X Z = w^{-1} Z X for this convention
    EXPECT_LE(max_abs(x * z - std::conj(w) * z * x), 1e-14);
}

TEST(Pauli, string_operator_is_tensor_product) {
    PauliString ps{2, {1, 0}, {1, 1}};
    Matrix expected = oracle::kron((pauli_x(2) * pauli_z(2)).matrix(), pauli_z(2).matrix());
    EXPECT_LE(max_abs(pauli_string_operator(ps).matrix() - expected), 1e-15);
    EXPECT_FALSE(ps.is_identity());
}

TEST(Pauli, enumeration) {
    auto all = all_pauli_strings(3, 1);
    ASSERT_EQ(all.size(), 9u);
    EXPECT_TRUE(all[0].is_identity());
    EXPECT_EQ(all_pauli_strings(2, 2).size(), 16u);
}

TEST(Basis, rejects_non_orthonormal) {
    Matrix m(2, 2);
    m << 1, 1, 0, 1;
    EXPECT_THROW(Basis(m, "bad"), std::invalid_argument);
}

TEST(PrimeMubs, qubit_case_matches_hand_written_bases) {
    MubSet s = prime_mubs(2);
    ASSERT_EQ(s.size(), 3u);
    double r = 1 / std::sqrt(2.0);
    Vector plus(2), minus(2), pi(2), mi(2);
    plus << r, r;
    minus << r, -r;
    pi << r, Complex(0, r);
    mi << r, Complex(0, -r);
    auto contains = [](const Basis &b, const Vector &v) {
        return same_ray(b.unitary().col(0), v) || same_ray(b.unitary().col(1), v);
    };
    for (const Vector &v : {plus, minus}) EXPECT_TRUE(contains(s.basis(1), v));
    for (const Vector &v : {pi, mi}) EXPECT_TRUE(contains(s.basis(2), v));
}

TEST(PrimeMubs, eigenvectors_of_xz_b) {
    for (int d : {3, 5, 7}) {
        MubSet s = prime_mubs(d);
        ASSERT_EQ(s.size(), size_t(d + 1));
        Matrix x = pauli_x(d).matrix();
        Matrix zb = Matrix::Identity(d, d);
        for (int b = 0; b < d; b++) {
            Matrix m = x * zb;
            const Matrix &u = s.basis(1 + b).unitary();
            for (int k = 0; k < d; k++) {
                Vector v = u.col(k);
                Complex lam = v.dot(m * v);
                EXPECT_LE((m * v - lam * v).norm(), 1e-10);
            }
            zb = zb * pauli_z(d).matrix();
        }
        for (size_t a = 0; a < s.size(); a++)
            for (size_t b = a + 1; b < s.size(); b++) EXPECT_LT(naive_deviation(s.basis(a), s.basis(b)), 1e-12);
    }
    EXPECT_THROW(prime_mubs(6), std::invalid_argument);
}

TEST(QubitTriple, single_qubit_columns) {
    MubSet s = qubit_triple(1);
    double r = 1 / std::sqrt(2.0);
    Matrix h(2, 2), k(2, 2);
    h << r, r, r, -r;
    k << r, Complex(0, r), Complex(0, r), r;
    for (int c = 0; c < 2; c++) {
        EXPECT_TRUE(same_ray(s.basis(1).unitary().col(c), h.col(c)));
        EXPECT_TRUE(same_ray(s.basis(2).unitary().col(c), k.col(c)));
    }
    MubSet s3 = qubit_triple(3);
    EXPECT_EQ(s3.dim(), 8u);
    EXPECT_EQ(s3.metadata_value("n"), "3");
}

TEST(LatinMubs, vector_layout) {
    MubSet s = latin_square_mubs(3);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s.dim(), 9u);
    // t = 0, l = 0 is the uniform superposition over cells holding symbol 1
    Vector v = s.basis(0).unitary().col(0);
    double r = 1 / std::sqrt(3.0);
    for (int idx : {0, 5, 7}) EXPECT_NEAR(std::abs(v(idx) - r), 0, 1e-15);
    EXPECT_LT(naive_deviation(s.basis(0), s.basis(3)), 1e-12);
    EXPECT_THROW(latin_square_mubs(4), std::invalid_argument);
}

TEST(ProductMubs, columns_are_u_tensor_conj_u) {
    MubSet base = prime_mubs(3);
    MubSet p = product_mubs(base);
    ASSERT_EQ(p.size(), base.size());
    EXPECT_EQ(p.dim(), 9u);
    for (size_t t = 0; t < base.size(); t++) {
        Matrix u = base.basis(t).unitary();
        EXPECT_LE(max_abs(p.basis(t).unitary() - oracle::kron(u, u.conjugate())), 1e-14);
    }
    EXPECT_EQ(p.base_family(), Family::prime_pauli);
    // deviation at most twice the base set's
    EXPECT_LE(check_mub(p).max_deviation, 2 * check_mub(base).max_deviation + 1e-15);
}

TEST(CheckMub, detects_duplicated_basis) {
    MubSet good = prime_mubs(3);
    std::vector<Basis> bases = good.bases();
    bases[2] = Basis::computational(3);
    MubSet bad(Family::custom, bases, "");
    CertificateReport r = check_mub(bad);
    EXPECT_FALSE(r.pass);
    EXPECT_NEAR(r.max_deviation, 1 - 1.0 / 3, 1e-12);
    ASSERT_EQ(r.offending.size(), 1u);
    EXPECT_EQ(r.offending[0].first, 0u);
    EXPECT_EQ(r.offending[0].second, 2u);

    CertificateReport ok = check_mub(good);
    EXPECT_TRUE(ok.pass);
    EXPECT_LT(ok.max_deviation, 1e-10);
    EXPECT_EQ(ok.pairs.size(), 6u);
}

TEST(PermutationWitness, every_string_permutes_every_basis) {
    for (const MubSet &s : {prime_mubs(3), prime_mubs(5), qubit_triple(2), qubit_triple(3)}) {
        auto layout = pauli_layout(s);
        ASSERT_TRUE(layout);
        for (const auto &ps : all_pauli_strings(layout->p, layout->qudits)) {
            PermutationReport r = permutation_witness(s, ps);
            EXPECT_TRUE(r.ok) << ps.str();
            // independent check of the reported permutation
            Matrix op = pauli_string_operator(ps).matrix();
            for (size_t t = 0; t < s.size(); t++) {
                const Matrix &u = s.basis(t).unitary();
                for (size_t k = 0; k < s.dim(); k++) {
                    size_t kk = r.permutations[t][k];
                    EXPECT_NEAR(std::norm(u.col(kk).dot(op * u.col(k))), 1.0, 1e-10);
                }
            }
        }
    }
}

TEST(PermutationWitness, product_sets_and_rejections) {
    MubSet p = product_mubs(qubit_triple(1));
    auto layout = pauli_layout(p);
    ASSERT_TRUE(layout);
    for (const auto &ps : all_pauli_strings(layout->p, layout->qudits)) EXPECT_TRUE(permutation_witness(p, ps).ok);
    EXPECT_FALSE(pauli_layout(latin_square_mubs(3)));
    EXPECT_THROW(permutation_witness(latin_square_mubs(3), PauliString{3, {1, 0}, {0, 0}}), std::invalid_argument);
    EXPECT_THROW(permutation_witness(prime_mubs(3), PauliString{2, {1}, {0}}), std::invalid_argument);
}

TEST(MubSet, subset_and_labels) {
    MubSet s = prime_mubs(5);
    MubSet sub = s.subset({3, 0});
    EXPECT_EQ(sub.size(), 2u);
    EXPECT_EQ(sub.basis(0).label(), s.basis(3).label());
    EXPECT_EQ(s.take(2).size(), 2u);
    EXPECT_THROW(s.take(9), std::invalid_argument);
    EXPECT_EQ(family_from_string(to_string(Family::qubit_triple)), Family::qubit_triple);
}

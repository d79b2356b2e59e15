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

#include "mubkit/linalg.h"

#include <gtest/gtest.h>

#include <cmath>

#include "mubkit/random.h"
#include "oracle.h"

using namespace mubkit;

TEST(StateVector, rejects_unnormalized) {
    Vector v(2);
    v << 1, 1;
    EXPECT_THROW(StateVector{v}, std::invalid_argument);
    StateVector s = StateVector::normalized(v);
    EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-15);
    EXPECT_THROW(StateVector::normalized(Vector::Zero(3)), std::invalid_argument);
}

TEST(StateVector, rejects_nan) {
    Vector v(2);
    v << std::nan(""), 0;
    EXPECT_THROW(StateVector{v}, std::invalid_argument);
}

TEST(Linalg, tensor_matches_naive_kron) {
    Rng rng(1);
    for (size_t da : {1, 2, 3}) {
        for (size_t db : {2, 4}) {
            Matrix a = random_unitary(da, rng).matrix();
            Matrix b = random_unitary(db, rng).matrix();
            EXPECT_LT(max_abs(tensor(Operator(a), Operator(b)).matrix() - oracle::kron(a, b)), 1e-15);
        }
    }
    Vector u(2), v(3);
    u << 1, Complex(0, 2);
    v << 3, 4, 5;
    Vector t = tensor(u, v);
    ASSERT_EQ(t.size(), 6);
    EXPECT_EQ(t(4), Complex(0, 8));
}

TEST(Linalg, inner_is_conjugate_linear_in_first) {
    Vector a(2), b(2);
    a << Complex(0, 1), 0;
    b << 1, 0;
    EXPECT_NEAR(std::abs(inner(StateVector(a), StateVector(b)) - Complex(0, -1)), 0, 1e-15);
}

TEST(Linalg, hermitian_eigen_reconstructs) {
    Rng rng(7);
    for (size_t d : {1, 2, 5, 16, 64}) {
        Matrix a = random_hermitian(d, rng).matrix();
        HermitianEigen e = hermitian_eigen(Operator(a));
        Matrix rebuilt = Matrix::Zero(d, d);
        for (size_t k = 0; k < d; k++) {
            Vector v = e.eigenvectors.col(k);
            rebuilt += e.eigenvalues[k] * v * v.adjoint();
            if (k > 0) EXPECT_LE(e.eigenvalues[k - 1], e.eigenvalues[k]);
        }
        EXPECT_LE(max_abs(a - rebuilt), 1e-10) << "d=" << d;
    }
}

TEST(Linalg, hermitian_eigen_is_deterministic_on_degenerate_input) {
    HermitianEigen a = hermitian_eigen(Operator::identity(4));
    HermitianEigen b = hermitian_eigen(Operator::identity(4));
    EXPECT_EQ(max_abs(a.eigenvectors - b.eigenvectors), 0.0);
}

TEST(Linalg, sym_projector) {
    for (size_t d = 1; d <= 8; d++) {
        Matrix p = sym_projector(d).matrix();
        EXPECT_LE(max_abs(p * p - p), 1e-12);
        EXPECT_NEAR(p.trace().real(), d * (d + 1) / 2.0, 1e-9);
        // |ab> + |ba> is fixed, |ab> - |ba> is annihilated.
        if (d >= 2) {
            Vector plus = Vector::Zero(d * d), minus = Vector::Zero(d * d);
            plus(0 * d + 1) = plus(1 * d + 0) = 1;
            minus(0 * d + 1) = 1;
            minus(1 * d + 0) = -1;
            EXPECT_LE((p * plus - plus).norm(), 1e-15);
            EXPECT_LE((p * minus).norm(), 1e-15);
        }
    }
}

TEST(Linalg, von_neumann_entropy_range) {
    Rng rng(3);
    for (size_t d : {2, 3, 8}) {
        EXPECT_NEAR(von_neumann_entropy(DensityOperator::maximally_mixed(d)), std::log2(double(d)), 1e-12);
        EXPECT_NEAR(von_neumann_entropy(DensityOperator::pure(random_state(d, rng))), 0.0, 1e-9);
        Matrix g = random_hermitian(d, rng).matrix();
        Matrix rho = g * g.adjoint();
        rho /= rho.trace().real();
        double s = von_neumann_entropy(DensityOperator(rho));
        EXPECT_GE(s, -1e-12);
        EXPECT_LE(s, std::log2(double(d)) + 1e-12);
    }
}

TEST(Linalg, density_operator_validation) {
    Matrix m = Matrix::Identity(2, 2);
    EXPECT_THROW(DensityOperator{m}, std::invalid_argument);  // trace 2
    Matrix neg(2, 2);
    neg << 1.5, 0, 0, -0.5;
    EXPECT_THROW(DensityOperator{neg}, std::invalid_argument);
    Matrix nonherm(2, 2);
    nonherm << 0.5, 1, 0, 0.5;
    EXPECT_THROW(DensityOperator{nonherm}, std::invalid_argument);
}

TEST(Linalg, phase_normalized_first_entry_real_positive) {
    Vector v(3);
    v << 0, Complex(0, -2), 1;
    Vector n = phase_normalized(v);
    EXPECT_NEAR(n(1).imag(), 0, 1e-15);
    EXPECT_GT(n(1).real(), 0);
    EXPECT_NEAR(std::abs(n(2)), 1, 1e-15);
}

TEST(Linalg, random_unitary_is_unitary) {
    Rng rng(5);
    for (size_t d : {2, 7, 16}) EXPECT_TRUE(is_unitary(random_unitary(d, rng), 1e-12));
    Matrix notu(2, 2);
    notu << 1, 1, 0, 1;
    EXPECT_FALSE(is_unitary(Operator(notu), 1e-9));
}

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

#ifndef MUBKIT_MUBS_H
#define MUBKIT_MUBS_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mubkit/linalg.h"

namespace mubkit {

inline constexpr double TOL_MUB = 1e-9;
inline constexpr double TOL_PERM = 1e-8;

/// Ordered orthonormal basis of C^d, stored as the columns of a unitary.
class Basis {
   public:
    /// Throws std::invalid_argument unless the columns are orthonormal within TOL_NORM.
    Basis(Matrix columns, std::string label);

    static Basis computational(size_t d);

    size_t dim() const { return static_cast<size_t>(u_.rows()); }
    /// Column k of the unitary (0-based).
    StateVector vector(size_t k) const;
    const Matrix &unitary() const { return u_; }
    const std::string &label() const { return label_; }

    /// Maximum of |<b_k|b_l> - delta_kl|.
    double orthonormality_defect() const;

   private:
    Matrix u_;
    std::string label_;
};

enum class Family { prime_pauli, qubit_triple, latin_square, product, custom };

std::string to_string(Family f);
Family family_from_string(const std::string &name);

/// A labeled family of bases in a common dimension.
///
/// Unbiasedness is not enforced on construction so that candidate sets can be
/// loaded and audited with check_mub; every constructor below returns a set
/// that passes it.
class MubSet {
   public:
    MubSet(Family family, std::vector<Basis> bases, std::string metadata);

    size_t dim() const { return bases_.front().dim(); }
    size_t size() const { return bases_.size(); }
    Family family() const { return family_; }
    const std::vector<Basis> &bases() const { return bases_; }
    const Basis &basis(size_t t) const { return bases_[t]; }
    const std::string &metadata() const { return metadata_; }

    /// Value of `key` in the `key=value;key=value` metadata string.
    std::optional<std::string> metadata_value(const std::string &key) const;
    /// Family of the set a product set was built from, if recorded.
    std::optional<Family> base_family() const;

    /// Keeps the bases at `indices`, in that order.
    MubSet subset(const std::vector<size_t> &indices) const;
    /// Keeps the first m bases.
    MubSet take(size_t m) const;

   private:
    Family family_;
    std::vector<Basis> bases_;
    std::string metadata_;
};

/// Exponent vectors of X_p^{a_1} Z_p^{b_1} (x) ... (x) X_p^{a_N} Z_p^{b_N}.
struct PauliString {
    int p;
    std::vector<int> a;
    std::vector<int> b;

    size_t qudits() const { return a.size(); }
    bool is_identity() const;
    std::string str() const;
};

/// The p^{2N} strings in lexicographic order of (a, b), identity first.
std::vector<PauliString> all_pauli_strings(int p, size_t n);

/// Shift X_d|k> = |k+1 mod d>.
Operator pauli_x(size_t d);
/// Clock Z_d|k> = w^k |k> with w = exp(2 pi i / d) and 1-based k.
Operator pauli_z(size_t d);
Operator pauli_string_operator(const PauliString &ps);

/// Eigenbasis of a unitary with d distinct eigenvalues, resolved through the Hermitian
/// parts M + M^dag and i(M^dag - M). Vectors are ordered by eigenvalue phase in [0, 2 pi).
Matrix unitary_eigenbasis(const Matrix &m);

/// Computational basis plus the eigenbases of X Z^b, b = 0..d-1 (d prime).
MubSet prime_mubs(int d);
/// Columns of I^{(x)n}, H^{(x)n}, K^{(x)n} with K = (I + i sigma_x)/sqrt 2.
MubSet qubit_triple(int n);
/// One basis in dimension s^2 per square in mols_prime(s) followed by the row and column squares.
///
/// Vector (t, l) of a square sits at index t*s + l (0-based t, l) and equals
/// s^{-1/2} sum_m w^{t m} |i_m, j_m>, where (i_m, j_m) runs over the cells
/// holding symbol l+1 in (row, column) order.
MubSet latin_square_mubs(int s);
/// V_t = { U_t|k> (x) conj(U_t)|l> } ordered by (k, l).
MubSet product_mubs(const MubSet &base);

struct PairDeviation {
    size_t first;
    size_t second;
    double max_deviation;
};

struct CertificateReport {
    size_t dim = 0;
    size_t bases = 0;
    double tol = 0;
    std::vector<double> orthonormality_defects;  // per basis
    std::vector<PairDeviation> pairs;            // every pair t < t'
    double max_orthonormality_defect = 0;
    double max_deviation = 0;  // max | |<b|b'>|^2 - 1/d |
    std::vector<PairDeviation> offending;
    bool pass = false;
};

CertificateReport check_mub(const MubSet &set, double tol = TOL_MUB);

struct PauliLayout {
    int p;
    size_t qudits;
};

/// Local dimension and qudit count for sets whose bases are permuted by Pauli strings.
std::optional<PauliLayout> pauli_layout(const MubSet &set);

struct PermutationReport {
    PauliString string;
    std::vector<std::vector<size_t>> permutations;  // [basis][k] = k' (0-based)
    std::vector<std::string> failures;
    bool ok = false;
};

/// For every basis vector b_k finds k' with |<b_k'| P |b_k>|^2 = 1 within TOL_PERM.
/// Throws std::invalid_argument for sets that are not built from Pauli eigenbases.
PermutationReport permutation_witness(const MubSet &set, const PauliString &ps);

}  // namespace mubkit

#endif

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

#ifndef MUBKIT_LINALG_H
#define MUBKIT_LINALG_H

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace mubkit {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr double TOL_NORM = 1e-9;
inline constexpr double TOL_HERM = 1e-9;
inline constexpr double TOL_EIG = 1e-8;
inline constexpr double TOL_PSD = 1e-9;
inline constexpr double TOL_PHASE = 1e-8;

/// A unit vector in C^d.
class StateVector {
   public:
    /// Throws std::invalid_argument unless the norm is 1 within TOL_NORM and every entry is finite.
    explicit StateVector(Vector amplitudes);

    /// Scales a nonzero finite vector to unit norm.
    static StateVector normalized(const Vector &v);
    /// Computational basis vector |index> (0-based index).
    static StateVector basis(size_t dim, size_t index);

    size_t dim() const { return static_cast<size_t>(amps_.size()); }
    const Vector &amplitudes() const { return amps_; }
    Complex operator[](size_t k) const { return amps_(static_cast<Eigen::Index>(k)); }

   private:
    Vector amps_;
};

/// Dense complex matrix mapping C^dim_in to C^dim_out.
class Operator {
   public:
    explicit Operator(Matrix entries);

    static Operator identity(size_t d);

    size_t dim_out() const { return static_cast<size_t>(m_.rows()); }
    size_t dim_in() const { return static_cast<size_t>(m_.cols()); }
    bool is_square() const { return m_.rows() == m_.cols(); }
    const Matrix &matrix() const { return m_; }

    Operator adjoint() const { return Operator(m_.adjoint()); }
    Operator conjugate() const { return Operator(m_.conjugate()); }
    Operator operator*(const Operator &other) const;
    Vector apply(const Vector &v) const;
    Vector apply(const StateVector &v) const { return apply(v.amplitudes()); }

   private:
    Matrix m_;
};

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityOperator {
   public:
    /// Validates Hermiticity (TOL_HERM), trace (TOL_NORM) and eigenvalues >= -TOL_PSD.
    explicit DensityOperator(Matrix m);

    static DensityOperator pure(const StateVector &psi);
    static DensityOperator maximally_mixed(size_t d);

    size_t dim() const { return static_cast<size_t>(m_.rows()); }
    const Matrix &matrix() const { return m_; }

   private:
    Matrix m_;
};

struct HermitianEigen {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // column k pairs with eigenvalues[k]
};

Operator tensor(const Operator &a, const Operator &b);
Vector tensor(const Vector &a, const Vector &b);

/// <u|v>, conjugate-linear in u.
Complex inner(const StateVector &u, const StateVector &v);

double max_abs(const Matrix &m);
bool is_hermitian(const Matrix &m, double tol = TOL_HERM);
bool is_unitary(const Operator &a, double tol);

/// Rotates v so that its first entry of modulus > TOL_PHASE is real and positive.
Vector phase_normalized(const Vector &v);

/// Eigendecomposition of a Hermitian operator.
///
/// Eigenvalues are ascending. Each eigenvector is phase normalized; vectors
/// sharing an eigenvalue (within TOL_EIG) are ordered lexicographically by
/// their (re, im) sequence so the output is deterministic.
HermitianEigen hermitian_eigen(const Operator &a);

/// Projector (I + SWAP)/2 onto the symmetric subspace of C^d (x) C^d.
Operator sym_projector(size_t d);

/// -sum lambda log2 lambda over the spectrum, in bits.
double von_neumann_entropy(const DensityOperator &rho);

}  // namespace mubkit

#endif

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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mubkit {

namespace {

bool all_finite(const Matrix &m) {
    for (Eigen::Index i = 0; i < m.size(); i++) {
        if (!std::isfinite(m.data()[i].real()) || !std::isfinite(m.data()[i].imag())) {
            return false;
        }
    }
    return true;
}

bool lex_less(const Vector &a, const Vector &b) {
    for (Eigen::Index i = 0; i < a.size(); i++) {
        if (a(i).real() != b(i).real()) {
            return a(i).real() < b(i).real();
        }
        if (a(i).imag() != b(i).imag()) {
            return a(i).imag() < b(i).imag();
        }
    }
    return false;
}

}  // namespace

StateVector::StateVector(Vector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() == 0) {
        throw std::invalid_argument("StateVector: dimension must be positive");
    }
    if (!all_finite(amps_)) {
        throw std::invalid_argument("StateVector: non-finite amplitude");
    }
    double n2 = amps_.squaredNorm();
    if (std::abs(n2 - 1.0) > TOL_NORM) {
        throw std::invalid_argument("StateVector: squared norm " + std::to_string(n2) + " is not 1");
    }
}

StateVector StateVector::normalized(const Vector &v) {
    double n = v.norm();
    if (!(n > 0) || !std::isfinite(n)) {
        throw std::invalid_argument("StateVector::normalized: zero or non-finite vector");
    }
    return StateVector(v / n);
}

StateVector StateVector::basis(size_t dim, size_t index) {
    if (index >= dim) {
        throw std::invalid_argument("StateVector::basis: index out of range");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v));
}

Operator::Operator(Matrix entries) : m_(std::move(entries)) {
    if (m_.rows() == 0 || m_.cols() == 0) {
        throw std::invalid_argument("Operator: dimensions must be positive");
    }
    if (!all_finite(m_)) {
        throw std::invalid_argument("Operator: non-finite entry");
    }
}

Operator Operator::identity(size_t d) {
    auto n = static_cast<Eigen::Index>(d);
    return Operator(Matrix::Identity(n, n));
}

Operator Operator::operator*(const Operator &other) const {
    if (dim_in() != other.dim_out()) {
        throw std::invalid_argument("Operator product: dimension mismatch");
    }
    return Operator(m_ * other.m_);
}

Vector Operator::apply(const Vector &v) const {
    if (static_cast<size_t>(v.size()) != dim_in()) {
        throw std::invalid_argument("Operator::apply: dimension mismatch");
    }
    return m_ * v;
}

DensityOperator::DensityOperator(Matrix m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
        throw std::invalid_argument("DensityOperator: matrix must be square and nonempty");
    }
    if (!all_finite(m_)) {
        throw std::invalid_argument("DensityOperator: non-finite entry");
    }
    if (!is_hermitian(m_, TOL_HERM)) {
        throw std::invalid_argument("DensityOperator: not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1.0)) > TOL_NORM) {
        throw std::invalid_argument("DensityOperator: trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -TOL_PSD) {
        throw std::invalid_argument("DensityOperator: negative eigenvalue");
    }
}

DensityOperator DensityOperator::pure(const StateVector &psi) {
    return DensityOperator(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityOperator DensityOperator::maximally_mixed(size_t d) {
    auto n = static_cast<Eigen::Index>(d);
    return DensityOperator(Matrix::Identity(n, n) / static_cast<double>(d));
}

Operator tensor(const Operator &a, const Operator &b) {
    const Matrix &x = a.matrix();
    const Matrix &y = b.matrix();
    Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); i++) {
        for (Eigen::Index j = 0; j < x.cols(); j++) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return Operator(std::move(out));
}

Vector tensor(const Vector &a, const Vector &b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); i++) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

Complex inner(const StateVector &u, const StateVector &v) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    return u.amplitudes().dot(v.amplitudes());
}

double max_abs(const Matrix &m) {
    double r = 0;
    for (Eigen::Index i = 0; i < m.size(); i++) {
        r = std::max(r, std::abs(m.data()[i]));
    }
    return r;
}

bool is_hermitian(const Matrix &m, double tol) {
    return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const Operator &a, double tol) {
    if (!a.is_square()) {
        throw std::invalid_argument("is_unitary: operator must be square");
    }
    auto n = static_cast<Eigen::Index>(a.dim_in());
    return max_abs(a.matrix().adjoint() * a.matrix() - Matrix::Identity(n, n)) <= tol;
}

Vector phase_normalized(const Vector &v) {
    for (Eigen::Index i = 0; i < v.size(); i++) {
        double r = std::abs(v(i));
        if (r > TOL_PHASE) {
            Vector out = v * (std::conj(v(i)) / r);
            out(i) = Complex(r, 0.0);
            return out;
        }
    }
    return v;
}

HermitianEigen hermitian_eigen(const Operator &a) {
    const Matrix &m = a.matrix();
    if (!is_hermitian(m, TOL_HERM)) {
        throw std::invalid_argument("hermitian_eigen: input is not Hermitian");
    }
    Matrix sym = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigen: eigensolver failed");
    }
    auto n = static_cast<size_t>(sym.rows());
    std::vector<Vector> vecs;
    vecs.reserve(n);
    for (size_t k = 0; k < n; k++) {
        vecs.push_back(phase_normalized(es.eigenvectors().col(static_cast<Eigen::Index>(k))));
    }
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto &vals = es.eigenvalues();
    // Solver output is already ascending; only runs of equal eigenvalues need reordering.
    size_t start = 0;
    while (start < n) {
        size_t end = start + 1;
        while (end < n && vals(static_cast<Eigen::Index>(end)) - vals(static_cast<Eigen::Index>(end - 1)) <= TOL_EIG) {
            end++;
        }
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(start), order.begin() + static_cast<std::ptrdiff_t>(end),
                  [&](size_t x, size_t y) { return lex_less(vecs[x], vecs[y]); });
        start = end;
    }
    HermitianEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(sym.rows(), sym.cols());
    for (size_t k = 0; k < n; k++) {
        out.eigenvalues[k] = vals(static_cast<Eigen::Index>(order[k]));
        out.eigenvectors.col(static_cast<Eigen::Index>(k)) = vecs[order[k]];
    }
    return out;
}

Operator sym_projector(size_t d) {
    if (d < 1) {
        throw std::invalid_argument("sym_projector: d must be positive");
    }
    auto n = static_cast<Eigen::Index>(d);
    Matrix p = Matrix::Zero(n * n, n * n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            p(i * n + j, i * n + j) += 0.5;
            p(j * n + i, i * n + j) += 0.5;
        }
    }
    return Operator(std::move(p));
}

double von_neumann_entropy(const DensityOperator &rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
    double h = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); i++) {
        double l = es.eigenvalues()(i);
        if (l > 0) {
            h -= l * std::log2(l);
        }
    }
    return h;
}

}  // namespace mubkit

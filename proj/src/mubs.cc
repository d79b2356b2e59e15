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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mubkit/squares.h"

namespace mubkit {

namespace {

Complex root_of_unity(size_t d, long long power) {
    long long r = power % static_cast<long long>(d);
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
    return std::polar(1.0, angle);
}

std::string join(const std::vector<std::string> &parts, char sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); i++) {
        if (i) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string with_labels(const std::string &metadata, const std::vector<Basis> &bases) {
    std::vector<std::string> kept;
    for (const auto &item : split(metadata, ';')) {
        if (!item.empty() && item.rfind("labels=", 0) != 0) {
            kept.push_back(item);
        }
    }
    std::vector<std::string> labels;
    for (const auto &b : bases) {
        labels.push_back(b.label());
    }
    kept.push_back("labels=" + join(labels, ','));
    return join(kept, ';');
}

size_t exact_log2(size_t d) {
    size_t n = 0;
    while ((size_t{1} << n) < d) {
        n++;
    }
    return (size_t{1} << n) == d ? n : 0;
}

size_t exact_sqrt(size_t d) {
    auto r = static_cast<size_t>(std::llround(std::sqrt(static_cast<double>(d))));
    return r * r == d ? r : 0;
}

Matrix kron_power(const Matrix &m, int n) {
    Operator out(m);
    for (int i = 1; i < n; i++) {
        out = tensor(out, Operator(m));
    }
    return out.matrix();
}

}  // namespace

Basis::Basis(Matrix columns, std::string label) : u_(std::move(columns)), label_(std::move(label)) {
    if (u_.rows() == 0 || u_.rows() != u_.cols()) {
        throw std::invalid_argument("Basis: need d vectors of dimension d");
    }
    Operator check(u_);  // rejects non-finite entries
    double defect = orthonormality_defect();
    if (defect > TOL_NORM) {
        throw std::invalid_argument("Basis '" + label_ + "': not orthonormal (defect " + std::to_string(defect) + ")");
    }
}

Basis Basis::computational(size_t d) {
    auto n = static_cast<Eigen::Index>(d);
    return Basis(Matrix::Identity(n, n), "computational");
}

StateVector Basis::vector(size_t k) const {
    return StateVector(u_.col(static_cast<Eigen::Index>(k)));
}

double Basis::orthonormality_defect() const {
    return max_abs(u_.adjoint() * u_ - Matrix::Identity(u_.rows(), u_.cols()));
}

std::string to_string(Family f) {
    switch (f) {
        case Family::prime_pauli:
            return "prime_pauli";
        case Family::qubit_triple:
            return "qubit_triple";
        case Family::latin_square:
            return "latin_square";
        case Family::product:
            return "product";
        case Family::custom:
            return "custom";
    }
    throw std::invalid_argument("unknown Family");
}

Family family_from_string(const std::string &name) {
    for (Family f : {Family::prime_pauli, Family::qubit_triple, Family::latin_square, Family::product, Family::custom}) {
        if (to_string(f) == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

MubSet::MubSet(Family family, std::vector<Basis> bases, std::string metadata)
    : family_(family), bases_(std::move(bases)), metadata_(std::move(metadata)) {
    if (bases_.empty()) {
        throw std::invalid_argument("MubSet: need at least one basis");
    }
    for (const auto &b : bases_) {
        if (b.dim() != bases_.front().dim()) {
            throw std::invalid_argument("MubSet: bases have different dimensions");
        }
    }
    metadata_ = with_labels(metadata_, bases_);
}

std::optional<std::string> MubSet::metadata_value(const std::string &key) const {
    for (const auto &item : split(metadata_, ';')) {
        auto eq = item.find('=');
        if (eq != std::string::npos && item.substr(0, eq) == key) {
            return item.substr(eq + 1);
        }
    }
    return std::nullopt;
}

std::optional<Family> MubSet::base_family() const {
    auto v = metadata_value("base_family");
    if (!v) {
        return std::nullopt;
    }
    return family_from_string(*v);
}

MubSet MubSet::subset(const std::vector<size_t> &indices) const {
    std::vector<Basis> picked;
    for (size_t i : indices) {
        if (i >= bases_.size()) {
            throw std::invalid_argument("MubSet::subset: basis index out of range");
        }
        picked.push_back(bases_[i]);
    }
    return MubSet(family_, std::move(picked), metadata_);
}

MubSet MubSet::take(size_t m) const {
    if (m < 1 || m > bases_.size()) {
        throw std::invalid_argument("MubSet::take: m must be in 1..size()");
    }
    std::vector<size_t> idx(m);
    for (size_t i = 0; i < m; i++) {
        idx[i] = i;
    }
    return subset(idx);
}

bool PauliString::is_identity() const {
    return std::all_of(a.begin(), a.end(), [](int v) { return v == 0; }) &&
           std::all_of(b.begin(), b.end(), [](int v) { return v == 0; });
}

std::string PauliString::str() const {
    std::ostringstream ss;
    for (size_t i = 0; i < a.size(); i++) {
        if (i) {
            ss << " (x) ";
        }
        ss << "X^" << a[i] << "Z^" << b[i];
    }
    return ss.str();
}

std::vector<PauliString> all_pauli_strings(int p, size_t n) {
    if (p < 2 || n < 1) {
        throw std::invalid_argument("all_pauli_strings: need p >= 2 and N >= 1");
    }
    std::vector<PauliString> out;
    std::vector<int> digits(2 * n, 0);
    while (true) {
        PauliString ps{p, std::vector<int>(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(n)),
                       std::vector<int>(digits.begin() + static_cast<std::ptrdiff_t>(n), digits.end())};
        out.push_back(std::move(ps));
        size_t pos = 2 * n;
        while (pos > 0) {
            pos--;
            if (++digits[pos] < p) {
                break;
            }
            digits[pos] = 0;
            if (pos == 0) {
                return out;
            }
        }
    }
}

Operator pauli_x(size_t d) {
    if (d < 2) {
        throw std::invalid_argument("pauli_x: d must be at least 2");
    }
    auto n = static_cast<Eigen::Index>(d);
    Matrix x = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; k++) {
        x((k + 1) % n, k) = 1.0;
    }
    return Operator(std::move(x));
}

Operator pauli_z(size_t d) {
    if (d < 2) {
        throw std::invalid_argument("pauli_z: d must be at least 2");
    }
    auto n = static_cast<Eigen::Index>(d);
    Matrix z = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; k++) {
        z(k, k) = root_of_unity(d, k + 1);
    }
    return Operator(std::move(z));
}

Operator pauli_string_operator(const PauliString &ps) {
    if (ps.a.size() != ps.b.size() || ps.a.empty()) {
        throw std::invalid_argument("pauli_string_operator: exponent vectors must be nonempty and equally long");
    }
    auto d = static_cast<size_t>(ps.p);
    Operator x = pauli_x(d);
    Operator z = pauli_z(d);
    std::optional<Operator> out;
    for (size_t i = 0; i < ps.a.size(); i++) {
        if (ps.a[i] < 0 || ps.a[i] >= ps.p || ps.b[i] < 0 || ps.b[i] >= ps.p) {
            throw std::invalid_argument("pauli_string_operator: exponent outside 0..p-1");
        }
        Operator factor = Operator::identity(d);
        for (int k = 0; k < ps.a[i]; k++) {
            factor = factor * x;
        }
        for (int k = 0; k < ps.b[i]; k++) {
            factor = factor * z;
        }
        out = out ? tensor(*out, factor) : factor;
    }
    return *out;
}

Matrix unitary_eigenbasis(const Matrix &m) {
    Matrix re_part = m + m.adjoint();
    Matrix im_part = Complex(0, 1) * (m.adjoint() - m);
    HermitianEigen first = hermitian_eigen(Operator(re_part));
    Matrix v = first.eigenvectors;
    auto n = static_cast<size_t>(m.rows());

    constexpr double cluster_tol = 1e-6;
    size_t start = 0;
    while (start < n) {
        size_t end = start + 1;
        while (end < n && first.eigenvalues[end] - first.eigenvalues[end - 1] <= cluster_tol) {
            end++;
        }
        if (end - start > 1) {
            auto k = static_cast<Eigen::Index>(end - start);
            Matrix sub = v.middleCols(static_cast<Eigen::Index>(start), k);
            Matrix restricted = sub.adjoint() * im_part * sub;
            restricted = (restricted + restricted.adjoint()) / 2.0;
            HermitianEigen second = hermitian_eigen(Operator(restricted));
            for (size_t i = 1; i < second.eigenvalues.size(); i++) {
                if (second.eigenvalues[i] - second.eigenvalues[i - 1] <= cluster_tol) {
                    throw std::invalid_argument("unitary_eigenbasis: degenerate spectrum");
                }
            }
            v.middleCols(static_cast<Eigen::Index>(start), k) = sub * second.eigenvectors;
        }
        start = end;
    }

    std::vector<std::pair<double, Eigen::Index>> order;
    for (Eigen::Index k = 0; k < v.cols(); k++) {
        Vector col = v.col(k);
        Complex lambda = col.dot(m * col);
        if ((m * col - lambda * col).norm() > TOL_EIG) {
            throw std::runtime_error("unitary_eigenbasis: eigenvector residual too large");
        }
        double arg = std::arg(lambda);
        if (arg < 0) {
            arg += 2 * std::numbers::pi;
        }
        if (arg > 2 * std::numbers::pi - 1e-9) {
            arg = 0;
        }
        order.emplace_back(arg, k);
    }
    std::sort(order.begin(), order.end());
    Matrix out(v.rows(), v.cols());
    for (size_t k = 0; k < order.size(); k++) {
        out.col(static_cast<Eigen::Index>(k)) = phase_normalized(v.col(order[k].second));
    }
    return out;
}

MubSet prime_mubs(int d) {
    if (!is_prime(d)) {
        throw std::invalid_argument("prime_mubs: dimension " + std::to_string(d) + " is not prime");
    }
    auto n = static_cast<size_t>(d);
    std::vector<Basis> bases;
    bases.push_back(Basis(Operator::identity(n).matrix(), "Z"));
    Operator x = pauli_x(n);
    Operator z = pauli_z(n);
    Operator m = x;
    for (int b = 0; b < d; b++) {
        std::string label = b == 0 ? "X" : b == 1 ? "XZ" : "XZ^" + std::to_string(b);
        bases.push_back(Basis(unitary_eigenbasis(m.matrix()), label));
        m = m * z;
    }
    return MubSet(Family::prime_pauli, std::move(bases),
                  "construction=eigenbases of Z,X,XZ^b;phase_convention=Z|k>=w^k|k> with 1-based k;vector_order=eigenvalue "
                  "phase ascending");
}

MubSet qubit_triple(int n) {
    if (n < 1) {
        throw std::invalid_argument("qubit_triple: n must be at least 1");
    }
    const double r = 1.0 / std::sqrt(2.0);
    Matrix h(2, 2);
    h << r, r, r, -r;
    Matrix k(2, 2);
    k << Complex(r, 0), Complex(0, r), Complex(0, r), Complex(r, 0);
    std::string suffix = n == 1 ? "" : "^" + std::to_string(n);
    std::vector<Basis> bases;
    bases.push_back(Basis(kron_power(Matrix::Identity(2, 2), n), "I" + suffix));
    bases.push_back(Basis(kron_power(h, n), "H" + suffix));
    bases.push_back(Basis(kron_power(k, n), "K" + suffix));
    return MubSet(Family::qubit_triple, std::move(bases),
                  "construction=I,H,K tensor powers;K=(I+i sigma_x)/sqrt2;n=" + std::to_string(n));
}

MubSet latin_square_mubs(int s) {
    std::vector<LatinSquare> squares = mols_prime(s);
    ExtraSquares extra = extra_squares(s);
    squares.push_back(extra.row_square);
    squares.push_back(extra.column_square);

    auto side = static_cast<size_t>(s);
    auto d = static_cast<Eigen::Index>(side * side);
    const double amp = 1.0 / std::sqrt(static_cast<double>(s));
    std::vector<Basis> bases;
    for (size_t q = 0; q < squares.size(); q++) {
        const LatinSquare &sq = squares[q];
        Matrix u = Matrix::Zero(d, d);
        for (size_t l = 0; l < side; l++) {
            auto cells = sq.cells_with(static_cast<int>(l) + 1);
            for (size_t t = 0; t < side; t++) {
                auto col = static_cast<Eigen::Index>(t * side + l);
                for (size_t mi = 0; mi < cells.size(); mi++) {
                    auto row = static_cast<Eigen::Index>(cells[mi].first * side + cells[mi].second);
                    u(row, col) = amp * root_of_unity(side, static_cast<long long>(t * mi));
                }
            }
        }
        std::string label = sq.kind() == SquareKind::latin      ? "L" + std::to_string(q + 1)
                            : sq.kind() == SquareKind::row_square ? "row"
                                                                  : "column";
        bases.push_back(Basis(std::move(u), label));
    }
    return MubSet(Family::latin_square, std::move(bases),
                  "construction=latin squares;mols=affine L_k(i,j)=k*i+j mod s;s=" + std::to_string(s) +
                      ";vector_index=t*s+l");
}

MubSet product_mubs(const MubSet &base) {
    CertificateReport cert = check_mub(base);
    if (!cert.pass) {
        throw std::invalid_argument("product_mubs: base set is not a valid set of MUBs");
    }
    std::vector<Basis> bases;
    for (const auto &b : base.bases()) {
        Operator u(b.unitary());
        bases.push_back(Basis(tensor(u, u.conjugate()).matrix(), "V(" + b.label() + ")"));
    }
    std::string meta = "construction=U_t (x) conj(U_t);base_family=" + to_string(base.family()) +
                       ";base_dim=" + std::to_string(base.dim());
    if (auto n = base.metadata_value("n")) {
        meta += ";n=" + *n;
    }
    return MubSet(Family::product, std::move(bases), meta);
}

CertificateReport check_mub(const MubSet &set, double tol) {
    CertificateReport r;
    r.dim = set.dim();
    r.bases = set.size();
    r.tol = tol;
    const double inv_d = 1.0 / static_cast<double>(set.dim());
    for (const auto &b : set.bases()) {
        double defect = b.orthonormality_defect();
        r.orthonormality_defects.push_back(defect);
        r.max_orthonormality_defect = std::max(r.max_orthonormality_defect, defect);
    }
    for (size_t t = 0; t < set.size(); t++) {
        for (size_t u = t + 1; u < set.size(); u++) {
            Matrix g = set.basis(t).unitary().adjoint() * set.basis(u).unitary();
            double dev = 0;
            for (Eigen::Index i = 0; i < g.size(); i++) {
                dev = std::max(dev, std::abs(std::norm(g.data()[i]) - inv_d));
            }
            PairDeviation pd{t, u, dev};
            r.pairs.push_back(pd);
            r.max_deviation = std::max(r.max_deviation, dev);
            if (dev > tol) {
                r.offending.push_back(pd);
            }
        }
    }
    r.pass = r.offending.empty() && r.max_orthonormality_defect <= tol;
    return r;
}

std::optional<PauliLayout> pauli_layout(const MubSet &set) {
    size_t d = set.dim();
    switch (set.family()) {
        case Family::prime_pauli:
            return PauliLayout{static_cast<int>(d), 1};
        case Family::qubit_triple:
            if (size_t n = exact_log2(d); n > 0) {
                return PauliLayout{2, n};
            }
            return std::nullopt;
        case Family::product: {
            auto base = set.base_family();
            if (base == Family::prime_pauli) {
                if (size_t s = exact_sqrt(d); s > 0) {
                    return PauliLayout{static_cast<int>(s), 2};
                }
            } else if (base == Family::qubit_triple) {
                if (size_t n = exact_log2(d); n > 0) {
                    return PauliLayout{2, n};
                }
            }
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

PermutationReport permutation_witness(const MubSet &set, const PauliString &ps) {
    auto layout = pauli_layout(set);
    if (!layout) {
        throw std::invalid_argument("permutation_witness: family '" + to_string(set.family()) +
                                    "' is not built from Pauli eigenbases");
    }
    if (layout->p != ps.p || layout->qudits != ps.qudits()) {
        throw std::invalid_argument("permutation_witness: Pauli string does not match the set's qudit layout");
    }
    Operator op = pauli_string_operator(ps);
    PermutationReport r{ps, {}, {}, false};
    for (size_t t = 0; t < set.size(); t++) {
        const Matrix &u = set.basis(t).unitary();
        Matrix w = u.adjoint() * op.matrix() * u;
        std::vector<size_t> perm(set.dim());
        for (Eigen::Index k = 0; k < w.cols(); k++) {
            bool found = false;
            for (Eigen::Index kp = 0; kp < w.rows(); kp++) {
                if (std::abs(std::norm(w(kp, k)) - 1.0) <= TOL_PERM) {
                    perm[static_cast<size_t>(k)] = static_cast<size_t>(kp);
                    found = true;
                    break;
                }
            }
            if (!found) {
                r.failures.push_back("basis " + std::to_string(t) + " vector " + std::to_string(k) +
                                     ": image is not a basis vector");
            }
        }
        r.permutations.push_back(std::move(perm));
    }
    r.ok = r.failures.empty();
    return r;
}

}  // namespace mubkit

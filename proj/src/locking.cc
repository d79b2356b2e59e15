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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mubkit/entropy.h"
#include "mubkit/parallel.h"
#include "mubkit/random.h"

namespace mubkit {

namespace {

std::string fmt(double x) {
    std::ostringstream ss;
    ss.precision(12);
    ss << x;
    return ss.str();
}

/// Mutual information from the amplitude table c(i, x) = <Phi_i|psi_x>.
double mutual_info_from_amplitudes(const Matrix &c, const std::vector<double> &weights, const std::vector<double> &prior) {
    auto outcomes = c.rows();
    auto labels = c.cols();
    std::vector<double> marginal(static_cast<size_t>(outcomes), 0.0);
    double conditional = 0;
    for (Eigen::Index x = 0; x < labels; x++) {
        double px = prior[static_cast<size_t>(x)];
        if (px <= 0) {
            continue;
        }
        for (Eigen::Index i = 0; i < outcomes; i++) {
            double q = weights[static_cast<size_t>(i)] * std::norm(c(i, x));
            marginal[static_cast<size_t>(i)] += px * q;
            if (q >= PROB_FLOOR) {
                conditional -= px * q * std::log2(q);
            }
        }
    }
    return shannon(marginal) - conditional;
}

}  // namespace

Prior::Prior(size_t bases, size_t dim, std::vector<double> weights) : m_(bases), d_(dim), w_(std::move(weights)) {
    if (m_ == 0 || d_ == 0 || w_.size() != m_ * d_) {
        throw std::invalid_argument("Prior: weights must form an m x d array");
    }
    double total = 0;
    for (double v : w_) {
        if (!std::isfinite(v) || v < 0) {
            throw std::invalid_argument("Prior: weights must be nonnegative");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > TOL_NORM) {
        throw std::invalid_argument("Prior: weights must sum to 1");
    }
}

Prior Prior::uniform(size_t bases, size_t dim) {
    return Prior(bases, dim, std::vector<double>(bases * dim, 1.0 / static_cast<double>(bases * dim)));
}

Prior Prior::from_basis_weights(const std::vector<double> &basis_weights, size_t dim) {
    std::vector<double> w;
    for (double pt : basis_weights) {
        for (size_t k = 0; k < dim; k++) {
            w.push_back(pt / static_cast<double>(dim));
        }
    }
    return Prior(basis_weights.size(), dim, std::move(w));
}

std::vector<double> Prior::basis_marginal() const {
    std::vector<double> out(m_, 0.0);
    for (size_t t = 0; t < m_; t++) {
        for (size_t k = 0; k < d_; k++) {
            out[t] += (*this)(t, k);
        }
    }
    return out;
}

bool Prior::is_uniform() const {
    double u = 1.0 / static_cast<double>(w_.size());
    for (double v : w_) {
        if (std::abs(v - u) > 1e-12) {
            return false;
        }
    }
    return true;
}

Prior random_prior(size_t bases, size_t dim, Rng &rng, double basis_cap) {
    if (bases == 0 || dim == 0 || basis_cap * static_cast<double>(bases) < 1.0) {
        throw std::invalid_argument("random_prior: no distribution satisfies the basis cap");
    }
    std::exponential_distribution<double> expo(1.0);
    auto simplex = [&](size_t n) {
        std::vector<double> v(n);
        double total = 0;
        for (double &x : v) {
            x = expo(rng);
            total += x;
        }
        for (double &x : v) {
            x /= total;
        }
        return v;
    };
    std::vector<double> pt;
    do {
        pt = simplex(bases);
    } while (*std::max_element(pt.begin(), pt.end()) > basis_cap);
    std::vector<double> w;
    for (size_t t = 0; t < bases; t++) {
        for (double q : simplex(dim)) {
            w.push_back(pt[t] * q);
        }
    }
    return Prior(bases, dim, std::move(w));
}

Matrix Ensemble::states() const {
    auto d = static_cast<Eigen::Index>(dim());
    Matrix s(d, static_cast<Eigen::Index>(size()));
    for (size_t t = 0; t < source.size(); t++) {
        s.middleCols(static_cast<Eigen::Index>(t) * d, d) = source.basis(t).unitary();
    }
    return s;
}

Ensemble build_locking_ensemble(const MubSet &set, const Prior &prior) {
    if (prior.bases() != set.size() || prior.dim() != set.dim()) {
        throw std::invalid_argument("build_locking_ensemble: prior shape does not match the set");
    }
    return Ensemble{set, prior};
}

Povm::Povm(std::vector<double> weights, Matrix vectors) : w_(std::move(weights)), v_(std::move(vectors)) {
    if (v_.rows() == 0 || static_cast<size_t>(v_.cols()) != w_.size()) {
        throw std::invalid_argument("Povm: need one weight per vector");
    }
    for (Eigen::Index i = 0; i < v_.cols(); i++) {
        if (w_[static_cast<size_t>(i)] < 0 || std::abs(v_.col(i).norm() - 1.0) > TOL_NORM) {
            throw std::invalid_argument("Povm: weights must be nonnegative and vectors normalized");
        }
    }
    if (completeness_defect() > TOL_POVM) {
        throw std::invalid_argument("Povm: elements do not sum to the identity");
    }
    if (std::abs(weight_sum() - static_cast<double>(dim())) > TOL_POVM) {
        throw std::invalid_argument("Povm: weights do not sum to d");
    }
}

Povm Povm::from_basis(const Basis &basis) {
    return Povm(std::vector<double>(basis.dim(), 1.0), basis.unitary());
}

double Povm::completeness_defect() const {
    Matrix acc = Matrix::Zero(v_.rows(), v_.rows());
    for (Eigen::Index i = 0; i < v_.cols(); i++) {
        acc.noalias() += w_[static_cast<size_t>(i)] * v_.col(i) * v_.col(i).adjoint();
    }
    return max_abs(acc - Matrix::Identity(v_.rows(), v_.rows()));
}

double Povm::weight_sum() const {
    double s = 0;
    for (double w : w_) {
        s += w;
    }
    return s;
}

double mutual_info_for_measurement(const Ensemble &e, const Povm &m) {
    if (m.dim() != e.dim()) {
        throw std::invalid_argument("mutual_info_for_measurement: dimension mismatch");
    }
    return mutual_info_from_amplitudes(m.vectors().adjoint() * e.states(), m.weights(), e.prior.weights());
}

Basis bell_basis(int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("bell_basis: n must be a positive even integer");
    }
    const double r = 1.0 / std::sqrt(2.0);
    Matrix pair = Matrix::Zero(4, 4);
    // columns G00, G01, G10, G11 over |00>, |01>, |10>, |11>
    pair(0, 0) = r;
    pair(3, 0) = r;
    pair(0, 1) = r;
    pair(3, 1) = -r;
    pair(1, 2) = r;
    pair(2, 2) = r;
    pair(1, 3) = r;
    pair(2, 3) = -r;
    Operator out(pair);
    for (int k = 2; k < n; k += 2) {
        out = tensor(out, Operator(pair));
    }
    return Basis(out.matrix(), n == 2 ? "Bell" : "Bell^" + std::to_string(n / 2));
}

Povm covariant_povm_from_state(const StateVector &psi, int p, size_t qudits) {
    size_t d = 1;
    for (size_t i = 0; i < qudits; i++) {
        d *= static_cast<size_t>(p);
    }
    if (psi.dim() != d) {
        throw std::invalid_argument("covariant_povm_from_state: state dimension is not p^N");
    }
    auto strings = all_pauli_strings(p, qudits);
    Matrix vecs(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(strings.size()));
    for (size_t i = 0; i < strings.size(); i++) {
        vecs.col(static_cast<Eigen::Index>(i)) = pauli_string_operator(strings[i]).matrix().adjoint() * psi.amplitudes();
    }
    return Povm(std::vector<double>(strings.size(), 1.0 / static_cast<double>(d)), std::move(vecs));
}

std::string to_string(AccessKind kind) {
    switch (kind) {
        case AccessKind::exact_covariant:
            return "exact_covariant";
        case AccessKind::lower_bound_measurement:
            return "lower_bound_measurement";
        case AccessKind::heuristic_search:
            return "heuristic_search";
    }
    throw std::invalid_argument("unknown AccessKind");
}

AccessibleInfoResult iacc_covariant(const MubSet &set, const MinimizationResult &min_result) {
    auto layout = pauli_layout(set);
    if (!layout) {
        throw std::invalid_argument("iacc_covariant: family '" + to_string(set.family()) +
                                    "' has no Pauli covariance");
    }
    if (min_result.best_state.dim() != set.dim()) {
        throw std::invalid_argument("iacc_covariant: minimization result does not belong to this set");
    }
    double log_d = std::log2(static_cast<double>(set.dim()));
    Ensemble e = build_locking_ensemble(set, Prior::uniform(set.size(), set.dim()));

    AccessibleInfoResult r;
    r.kind = AccessKind::exact_covariant;
    r.value = log_d - min_result.best_value;
    r.upper_bound = r.value;
    Povm povm = covariant_povm_from_state(min_result.best_state, layout->p, layout->qudits);
    r.measurement_value = mutual_info_for_measurement(e, povm);
    r.certificate = "I_acc = log2 d - min avg entropy = " + fmt(log_d) + " - " + fmt(min_result.best_value) +
                    "; covariant POVM with " + std::to_string(povm.size()) +
                    " elements from the minimizing state attains " + fmt(*r.measurement_value);
    if (set.family() == Family::qubit_triple && layout->qudits % 2 == 0) {
        double bell = mutual_info_for_measurement(e, Povm::from_basis(bell_basis(static_cast<int>(layout->qudits))));
        if (std::abs(bell - r.value) <= 1e-6) {
            r.measurement_value = bell;
            r.certificate += "; Bell basis measurement attains " + fmt(bell);
        }
    }
    return r;
}

AccessibleInfoResult iacc_latin(const MubSet &set) {
    if (set.family() != Family::latin_square) {
        throw std::invalid_argument("iacc_latin: set is not a Latin-square family");
    }
    if (set.size() < 2) {
        throw std::invalid_argument("iacc_latin: need at least two bases");
    }
    double log_d = std::log2(static_cast<double>(set.dim()));
    Ensemble e = build_locking_ensemble(set, Prior::uniform(set.size(), set.dim()));
    double computational = mutual_info_for_measurement(e, Povm::from_basis(Basis::computational(set.dim())));
    double witness_avg = avg_entropy(set, StateVector::basis(set.dim(), 0));

    AccessibleInfoResult r;
    r.kind = AccessKind::exact_covariant;
    r.value = log_d / 2.0;
    r.measurement_value = computational;
    // The average entropy is at least (log2 d)/2 for any set of MUBs, so log d minus it caps I_acc.
    r.upper_bound = log_d - log_d / 2.0;
    r.certificate = "computational-basis measurement attains " + fmt(computational) +
                    "; upper bound log2 d - min avg entropy = " + fmt(*r.upper_bound) +
                    " with the minimum (log2 d)/2 reached by |1,1> (avg entropy " + fmt(witness_avg) + ")";
    return r;
}

AccessibleInfoResult iacc_lower_search(const Ensemble &e, const SearchOptions &options, Matrix *best_measurement) {
    if (options.restarts < 1) {
        throw std::invalid_argument("iacc_lower_search: restarts must be at least 1");
    }
    const Matrix states = e.states();
    const auto d = static_cast<Eigen::Index>(e.dim());
    const std::vector<double> ones(static_cast<size_t>(d), 1.0);
    const std::vector<double> &prior = e.prior.weights();

    struct Run {
        double value = -1;
        Matrix u;
    };
    std::vector<Run> runs(static_cast<size_t>(options.restarts));
    parallel_for(runs.size(), [&](size_t r) {
        Rng rng(options.seed + r);
        Matrix u = random_unitary(e.dim(), rng).matrix();
        Matrix c = u.adjoint() * states;
        double best = mutual_info_from_amplitudes(c, ones, prior);
        double step = options.initial_step;
        const Complex phases[2] = {Complex(1, 0), Complex(0, 1)};
        while (step >= options.min_step) {
            bool improved = false;
            for (Eigen::Index i = 0; i < d; i++) {
                for (Eigen::Index j = i + 1; j < d; j++) {
                    for (Complex ph : phases) {
                        for (double sign : {1.0, -1.0}) {
                            double cs = std::cos(sign * step);
                            double sn = std::sin(sign * step);
                            // columns (u_i, u_j) -> (c u_i + ph s u_j, -conj(ph) s u_i + c u_j)
                            Eigen::RowVectorXcd ri = cs * c.row(i) + std::conj(ph) * sn * c.row(j);
                            Eigen::RowVectorXcd rj = -ph * sn * c.row(i) + cs * c.row(j);
                            Eigen::RowVectorXcd old_i = c.row(i);
                            Eigen::RowVectorXcd old_j = c.row(j);
                            c.row(i) = ri;
                            c.row(j) = rj;
                            double v = mutual_info_from_amplitudes(c, ones, prior);
                            if (v > best + 1e-15) {
                                best = v;
                                Vector ui = cs * u.col(i) + ph * sn * u.col(j);
                                Vector uj = -std::conj(ph) * sn * u.col(i) + cs * u.col(j);
                                u.col(i) = ui;
                                u.col(j) = uj;
                                improved = true;
                            } else {
                                c.row(i) = old_i;
                                c.row(j) = old_j;
                            }
                        }
                    }
                }
            }
            if (!improved) {
                step *= options.shrink;
            }
        }
        runs[r].value = best;
        runs[r].u = std::move(u);
    });

    size_t best = 0;
    for (size_t r = 1; r < runs.size(); r++) {
        if (runs[r].value > runs[best].value) {
            best = r;
        }
    }
    AccessibleInfoResult out;
    out.kind = AccessKind::heuristic_search;
    out.value = runs[best].value;
    out.measurement_value = runs[best].value;
    out.certificate = "projective measurement from Givens-rotation ascent, " + std::to_string(options.restarts) +
                      " restarts, best restart " + std::to_string(best) + " (lower bound on I_acc)";
    if (best_measurement != nullptr) {
        *best_measurement = runs[best].u;
    }
    return out;
}

GapReport locking_gap(const Ensemble &e, const std::optional<Povm> &m,
                      const std::optional<AccessibleInfoResult> &uniform_iacc) {
    if (e.source.family() != Family::qubit_triple || e.source.size() != 3) {
        throw std::invalid_argument("locking_gap: ensemble must be built from qubit_triple(n)");
    }
    auto layout = pauli_layout(e.source);
    int n = static_cast<int>(layout->qudits);
    Povm meas = m ? *m : Povm::from_basis(bell_basis(n));
    if (meas.dim() != e.dim() || meas.size() != e.dim()) {
        throw std::invalid_argument("locking_gap: measurement must be a basis of the ensemble's space");
    }

    GapReport g;
    g.n = n;
    g.joint_entropy = shannon(e.prior.weights());
    g.basis_entropy = shannon(e.prior.basis_marginal());

    Matrix states = e.states();
    Matrix mu = Matrix::Zero(states.rows(), states.rows());
    for (Eigen::Index x = 0; x < states.cols(); x++) {
        mu.noalias() += e.prior.weights()[static_cast<size_t>(x)] * states.col(x) * states.col(x).adjoint();
    }
    mu = (mu + mu.adjoint()) / 2.0;
    g.mu_entropy = von_neumann_entropy(DensityOperator(mu));
    std::vector<double> nu(meas.size());
    for (Eigen::Index i = 0; i < meas.vectors().cols(); i++) {
        Vector v = meas.vectors().col(i);
        nu[static_cast<size_t>(i)] = meas.weights()[static_cast<size_t>(i)] * v.dot(mu * v).real();
    }
    g.nu_entropy = shannon(nu);
    g.measurement_info = mutual_info_for_measurement(e, meas);
    g.gap1_bound = g.joint_entropy - g.nu_entropy + n / 2.0 - g.basis_entropy;
    g.delta_upper_bound = g.joint_entropy - g.measurement_info - g.basis_entropy;
    g.final_bound = n / 2.0;
    if (e.prior.is_uniform()) {
        AccessibleInfoResult iacc = uniform_iacc ? *uniform_iacc
                                                 : iacc_covariant(e.source, minimize_avg_entropy(e.source, {16, 0}));
        g.exact = true;
        g.iacc = iacc.value;
        g.delta = g.joint_entropy - iacc.value - g.basis_entropy;
    }
    return g;
}

double unlocked_info(const Ensemble &e) {
    if (!e.prior.is_uniform()) {
        throw std::invalid_argument("unlocked_info: prior is not uniform; the unlocked correlation is H(p_{k,t})");
    }
    return std::log2(static_cast<double>(e.dim())) + std::log2(static_cast<double>(e.source.size()));
}

}  // namespace mubkit

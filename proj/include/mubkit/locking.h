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

#ifndef MUBKIT_LOCKING_H
#define MUBKIT_LOCKING_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mubkit/linalg.h"
#include "mubkit/mubs.h"
#include "mubkit/random.h"
#include "mubkit/uncertainty.h"

namespace mubkit {

inline constexpr double TOL_POVM = 1e-9;

/// Joint distribution p_{t,k} over (basis t, vector k), row-major in t.
class Prior {
   public:
    Prior(size_t bases, size_t dim, std::vector<double> weights);

    static Prior uniform(size_t bases, size_t dim);
    /// p_{t,k} = p_t / d.
    static Prior from_basis_weights(const std::vector<double> &basis_weights, size_t dim);

    size_t bases() const { return m_; }
    size_t dim() const { return d_; }
    double operator()(size_t t, size_t k) const { return w_[t * d_ + k]; }
    const std::vector<double> &weights() const { return w_; }
    /// p_t = sum_k p_{t,k}.
    std::vector<double> basis_marginal() const;
    bool is_uniform() const;

   private:
    size_t m_;
    size_t d_;
    std::vector<double> w_;
};

/// The states |b^t_k> of a set together with a prior over (t, k).
struct Ensemble {
    MubSet source;
    Prior prior;

    size_t dim() const { return source.dim(); }
    size_t size() const { return source.size() * source.dim(); }
    /// Columns are the ensemble states, column t*d + k holds |b^t_k>.
    Matrix states() const;
};

/// Random joint prior: basis weights p_t drawn uniformly from the simplex and
/// redrawn until every p_t <= basis_cap, then p_{k|t} uniform on the simplex.
Prior random_prior(size_t bases, size_t dim, Rng &rng, double basis_cap = 1.0);

Ensemble build_locking_ensemble(const MubSet &set, const Prior &prior);

/// Rank-one POVM {alpha_i |Phi_i><Phi_i|}.
class Povm {
   public:
    /// Throws std::invalid_argument unless the elements resolve the identity within TOL_POVM.
    Povm(std::vector<double> weights, Matrix vectors);

    static Povm from_basis(const Basis &basis);

    size_t dim() const { return static_cast<size_t>(v_.rows()); }
    size_t size() const { return w_.size(); }
    const std::vector<double> &weights() const { return w_; }
    /// Column i is |Phi_i>.
    const Matrix &vectors() const { return v_; }
    double completeness_defect() const;
    double weight_sum() const;

   private:
    std::vector<double> w_;
    Matrix v_;
};

/// Classical mutual information between the label (t, k) and the outcome of M.
double mutual_info_for_measurement(const Ensemble &e, const Povm &m);

/// Tensor products of the two-qubit vectors
/// G00 = (|00>+|11>)/sqrt2, G01 = (|00>-|11>)/sqrt2, G10 = (|01>+|10>)/sqrt2, G11 = (|01>-|10>)/sqrt2,
/// index i read as the bit string i_1 i_2 ... i_n. Requires even n.
Basis bell_basis(int n);

/// d^2 elements (1/d) |Phi_ab><Phi_ab| with |Phi_ab> = P_ab^dag |psi> over all Pauli strings P_ab.
Povm covariant_povm_from_state(const StateVector &psi, int p, size_t qudits);

enum class AccessKind { exact_covariant, lower_bound_measurement, heuristic_search };

std::string to_string(AccessKind kind);

struct AccessibleInfoResult {
    double value = 0;
    AccessKind kind = AccessKind::heuristic_search;
    std::string certificate;
    /// Mutual information attained by the recorded witness measurement.
    std::optional<double> measurement_value;
    /// Upper bound log d - min avg entropy, when one is available.
    std::optional<double> upper_bound;
};

/// log2 d minus the minimal average entropy, for sets permuted by Pauli strings.
AccessibleInfoResult iacc_covariant(const MubSet &set, const MinimizationResult &min_result);

/// (log2 d) / 2 for Latin-square sets with at least two bases.
AccessibleInfoResult iacc_latin(const MubSet &set);

struct SearchOptions {
    int restarts = 64;
    uint64_t seed = 0;
    double initial_step = 0.5;
    double shrink = 0.7;
    double min_step = 1e-6;
};

/// Best projective measurement found by Givens-rotation hill climbing.
/// Returns the best unitary's columns as well through `best_measurement` when non-null.
AccessibleInfoResult iacc_lower_search(const Ensemble &e, const SearchOptions &options = {},
                                       Matrix *best_measurement = nullptr);

struct GapReport {
    int n = 0;
    double joint_entropy = 0;          // H(p_{k,t})
    double basis_entropy = 0;          // H(p_t)
    double mu_entropy = 0;             // S(mu)
    double nu_entropy = 0;             // S(nu), nu the post-measurement state
    double measurement_info = 0;       // mutual information attained by M
    double gap1_bound = 0;             // H(p_{k,t}) - S(nu) + n/2 - H(p_t)
    double delta_upper_bound = 0;      // H(p_{k,t}) - I(M) - H(p_t)
    double final_bound = 0;            // n/2
    bool exact = false;                // uniform prior, I_acc known exactly
    std::optional<double> iacc;
    std::optional<double> delta;
};

/// Information gap chain for an ensemble over qubit_triple(n), M a basis measurement
/// (the Bell basis by default). With a uniform prior the exact accessible
/// information comes from `uniform_iacc` or, when absent, from iacc_covariant.
GapReport locking_gap(const Ensemble &e, const std::optional<Povm> &m = std::nullopt,
                      const std::optional<AccessibleInfoResult> &uniform_iacc = std::nullopt);

/// log2 d + log2 m: the correlation once the basis label is revealed (uniform prior only).
double unlocked_info(const Ensemble &e);

}  // namespace mubkit

#endif

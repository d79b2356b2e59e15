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

#include "mubkit/acceptance.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mubkit/designs.h"
#include "mubkit/entropy.h"
#include "mubkit/locking.h"
#include "mubkit/mubs.h"
#include "mubkit/random.h"
#include "mubkit/uncertainty.h"

namespace mubkit {

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            if (passed) {
                detail << "FAILED: ";
            } else {
                detail << "; ";
            }
            detail << what;
            passed = false;
        }
    }
};

struct NamedSet {
    std::string name;
    MubSet set;
};

std::vector<NamedSet> constructed_sets() {
    std::vector<NamedSet> base;
    for (int d : {2, 3, 5, 7}) {
        base.push_back({"prime_mubs(" + std::to_string(d) + ")", prime_mubs(d)});
    }
    for (int n : {1, 2, 3}) {
        base.push_back({"qubit_triple(" + std::to_string(n) + ")", qubit_triple(n)});
    }
    for (int s : {2, 3, 5}) {
        base.push_back({"latin_square_mubs(" + std::to_string(s) + ")", latin_square_mubs(s)});
    }
    std::vector<NamedSet> all = base;
    for (const auto &b : base) {
        all.push_back({"product_mubs(" + b.name + ")", product_mubs(b.set)});
    }
    return all;
}

std::string num(double x) {
    std::ostringstream ss;
    ss.precision(6);
    ss << x;
    return ss.str();
}

bool is_full_set(const MubSet &s) {
    return s.size() == s.dim() + 1;
}

/// Restores MUBKIT_THREADS on scope exit.
class ThreadOverride {
   public:
    explicit ThreadOverride(const char *value) {
        if (const char *old = std::getenv("MUBKIT_THREADS")) {
            saved_ = old;
        }
        setenv("MUBKIT_THREADS", value, 1);
    }
    ~ThreadOverride() {
        if (saved_.empty()) {
            unsetenv("MUBKIT_THREADS");
        } else {
            setenv("MUBKIT_THREADS", saved_.c_str(), 1);
        }
    }

   private:
    std::string saved_;
};

Outcome construction_validity(const AcceptanceOptions &) {
    Outcome o;
    double worst = 0;
    auto sets = constructed_sets();
    for (const auto &ns : sets) {
        CertificateReport r = check_mub(ns.set, 1e-9);
        worst = std::max(worst, r.max_deviation);
        o.require(r.pass && r.max_deviation < 1e-9, ns.name + " max deviation " + num(r.max_deviation));
    }
    o.detail << sets.size() << " sets, worst | |<b|b'>|^2 - 1/d | = " << num(worst);
    return o;
}

Outcome worked_example(const AcceptanceOptions &) {
    Outcome o;
    MubSet set = latin_square_mubs(3);
    const Basis &first = set.basis(0);
    const Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
    // (coefficient, row, column) triples of the printed vectors, 1-based cells.
    struct Term {
        Complex c;
        int i;
        int j;
    };
    const std::vector<std::pair<std::string, std::vector<Term>>> printed = {
        {"v11", {{1, 1, 1}, {1, 2, 3}, {1, 3, 2}}},
        {"v12", {{1, 1, 2}, {1, 2, 1}, {1, 3, 3}}},
        {"v13", {{1, 1, 3}, {1, 2, 2}, {1, 3, 1}}},
        {"v11 (Hadamard row 1)", {{1, 1, 1}, {1, 2, 3}, {1, 3, 2}}},
        {"v21", {{1, 1, 1}, {w, 2, 3}, {w * w, 3, 2}}},
        {"v31", {{1, 1, 1}, {w * w, 2, 3}, {w, 3, 2}}},
    };
    double worst = 1;
    for (const auto &[name, terms] : printed) {
        Vector v = Vector::Zero(9);
        for (const auto &t : terms) {
            v((t.i - 1) * 3 + (t.j - 1)) = t.c / std::sqrt(3.0);
        }
        double best = 0;
        for (size_t k = 0; k < first.dim(); k++) {
            best = std::max(best, std::norm(first.unitary().col(static_cast<Eigen::Index>(k)).dot(v)));
        }
        worst = std::min(worst, best);
        o.require(best >= 1 - 1e-10, name + " best fidelity " + num(best));
    }
    o.detail << "6 printed vectors, worst fidelity 1 - " << num(1 - worst);
    return o;
}

Outcome two_design(const AcceptanceOptions &opt) {
    Outcome o;
    Rng rng(opt.seed);
    double worst_defect = 0;
    double worst_moment = 0;
    for (int d : {2, 3, 5, 7}) {
        MubSet s = prime_mubs(d);
        double defect = two_design_defect(s);
        worst_defect = std::max(worst_defect, defect);
        o.require(defect <= 1e-9, "prime_mubs(" + std::to_string(d) + ") defect " + num(defect));
        for (int i = 0; i < 200; i++) {
            double fm = fourth_moment(s, random_state(s.dim(), rng));
            worst_moment = std::max(worst_moment, std::abs(fm - 2.0));
        }
    }
    o.require(worst_moment <= 1e-9, "fourth moment deviates by " + num(worst_moment));
    o.detail << "max defect " << num(worst_defect) << ", max |fourth moment - 2| " << num(worst_moment);
    return o;
}

Outcome entropic_bounds(const AcceptanceOptions &opt) {
    Outcome o;
    Rng rng(opt.seed + 1);
    double min_slack = 1e300;
    double min_full_slack = 1e300;
    double min_h_gap = 1e300;
    double min_mu_slack = 1e300;
    for (const auto &ns : constructed_sets()) {
        const MubSet &s = ns.set;
        double half_log = std::log2(static_cast<double>(s.dim())) / 2.0;
        std::vector<double> mu;
        for (size_t t = 0; t < s.size(); t++) {
            for (size_t u = t + 1; u < s.size(); u++) {
                mu.push_back(maassen_uffink_bound(s.basis(t), s.basis(u)));
            }
        }
        for (int i = 0; i < 1000; i++) {
            StateVector psi = random_state(s.dim(), rng);
            std::vector<double> h(s.size());
            double avg_h = 0;
            double avg_h2 = 0;
            for (size_t t = 0; t < s.size(); t++) {
                h[t] = shannon_entropy(s.basis(t), psi);
                double h2 = renyi2_entropy(s.basis(t), psi);
                min_h_gap = std::min(min_h_gap, h[t] - h2);
                avg_h += h[t];
                avg_h2 += h2;
            }
            avg_h /= static_cast<double>(s.size());
            avg_h2 /= static_cast<double>(s.size());
            min_slack = std::min(min_slack, avg_h - half_log);
            if (is_full_set(s)) {
                double fb = full_set_bound(static_cast<int>(s.dim()));
                min_full_slack = std::min(min_full_slack, std::min(avg_h, avg_h2) - fb);
            }
            size_t pair = 0;
            for (size_t t = 0; t < s.size(); t++) {
                for (size_t u = t + 1; u < s.size(); u++) {
                    min_mu_slack = std::min(min_mu_slack, (h[t] + h[u]) / 2.0 - mu[pair++]);
                }
            }
        }
    }
    o.require(min_slack >= -1e-9, "average Shannon entropy below (log2 d)/2 by " + num(-min_slack));
    o.require(min_full_slack >= -1e-9, "full-set average below log2((d+1)/2) by " + num(-min_full_slack));
    o.require(min_h_gap >= -1e-12, "H < H2 by " + num(-min_h_gap));
    o.require(min_mu_slack >= -1e-9, "pairwise Maassen-Uffink violated by " + num(-min_mu_slack));
    o.detail << "min slack vs (log d)/2 " << num(min_slack) << ", vs full-set bound " << num(min_full_slack)
             << ", min H - H2 " << num(min_h_gap);
    return o;
}

void check_tight(Outcome &o, const std::string &name, const MubSet &s, const AcceptanceOptions &opt, double &worst_gap) {
    double bound = std::log2(static_cast<double>(s.dim())) / 2.0;
    MinimizationResult r = minimize_avg_entropy(s, {opt.restarts, opt.seed});
    TightnessCertificate c = certify_tightness(s, r);
    auto w = witness_state(s);
    double witness_gap = w ? std::abs(avg_entropy(s, *w) - bound) : 1.0;
    worst_gap = std::max(worst_gap, std::abs(r.best_value - bound));
    o.require(std::abs(r.best_value - bound) <= 1e-6, name + " minimum " + num(r.best_value) + " vs " + num(bound));
    o.require(witness_gap <= 1e-10, name + " witness off by " + num(witness_gap));
    o.require(c.tight, name + " not certified tight");
}

Outcome tightness_square(const AcceptanceOptions &opt) {
    Outcome o;
    double worst = 0;
    check_tight(o, "product(qubit_triple(1))", product_mubs(qubit_triple(1)), opt, worst);
    MubSet p3 = product_mubs(prime_mubs(3));
    for (size_t m : {2, 3, 4}) {
        check_tight(o, "product(prime_mubs(3)) m=" + std::to_string(m), p3.take(m), opt, worst);
    }
    o.detail << "4 sets, max |min - (log2 d)/2| " << num(worst);
    return o;
}

Outcome tightness_latin(const AcceptanceOptions &opt) {
    Outcome o;
    MubSet l3 = latin_square_mubs(3);
    double worst = 0;
    int count = 0;
    for (unsigned mask = 0; mask < 16; mask++) {
        std::vector<size_t> idx;
        for (size_t t = 0; t < 4; t++) {
            if (mask & (1u << t)) {
                idx.push_back(t);
            }
        }
        if (idx.size() < 2) {
            continue;
        }
        std::string name = "latin(3) bases {";
        for (size_t t : idx) {
            name += std::to_string(t + 1);
        }
        name += "}";
        check_tight(o, name, l3.subset(idx), opt, worst);
        count++;
    }
    o.detail << count << " subsets, max |min - log2 3| " << num(worst);
    return o;
}

Outcome locking_three(const AcceptanceOptions &opt) {
    Outcome o;
    MubSet q = qubit_triple(2);
    Ensemble e = build_locking_ensemble(q, Prior::uniform(3, 4));
    double bell = mutual_info_for_measurement(e, Povm::from_basis(bell_basis(2)));
    AccessibleInfoResult cov = iacc_covariant(q, minimize_avg_entropy(q, {opt.restarts, opt.seed}));
    AccessibleInfoResult search = iacc_lower_search(e, {64, opt.seed});
    double unlocked = unlocked_info(e);
    o.require(std::abs(bell - 1.0) <= 1e-9, "Bell mutual information " + num(bell));
    o.require(std::abs(cov.value - 1.0) <= 1e-6, "iacc_covariant " + num(cov.value));
    o.require(search.value >= 1.0 - 1e-4 && search.value <= 1.0 + 1e-6, "search " + num(search.value));
    o.require(std::abs(unlocked - (2.0 + std::log2(3.0))) <= 1e-12, "unlocked " + num(unlocked));
    o.detail << "Bell " << num(bell) << ", covariant " << num(cov.value) << ", search " << num(search.value)
             << ", unlocked " << num(unlocked) << " bits";
    return o;
}

Outcome locking_nonuniform(const AcceptanceOptions &opt) {
    Outcome o;
    MubSet q = qubit_triple(2);
    Ensemble skewed = build_locking_ensemble(q, Prior::from_basis_weights({0.2, 0.2, 0.6}, 4));
    double third = mutual_info_for_measurement(skewed, Povm::from_basis(q.basis(2)));
    o.require(third >= 1.2 - 1e-9 && third > 1.0, "measuring basis 3 gives " + num(third));

    Rng rng(opt.seed + 2);
    double worst = -1e300;
    for (int i = 0; i < 50; i++) {
        Ensemble e = build_locking_ensemble(q, random_prior(3, 4, rng, 0.5));
        GapReport g = locking_gap(e);
        worst = std::max({worst, g.gap1_bound, g.delta_upper_bound});
    }
    o.require(worst <= 1.0 + 1e-9, "random-prior gap bound " + num(worst));

    Ensemble uniform = build_locking_ensemble(q, Prior::uniform(3, 4));
    GapReport gu = locking_gap(uniform, std::nullopt, iacc_covariant(q, minimize_avg_entropy(q, {opt.restarts, opt.seed})));
    o.require(std::abs(gu.gap1_bound - 1.0) <= 1e-9, "uniform gap1 bound " + num(gu.gap1_bound));
    o.require(gu.delta && std::abs(*gu.delta - 1.0) <= 1e-6, "uniform delta " + num(gu.delta.value_or(-1)));
    o.detail << "basis-3 measurement " << num(third) << " bits, max bound over 50 priors " << num(worst)
             << ", uniform delta " << num(gu.delta.value_or(-1));
    return o;
}

Outcome locking_latin_product(const AcceptanceOptions &opt) {
    Outcome o;
    MubSet l3 = latin_square_mubs(3);
    for (size_t m : {2, 4}) {
        AccessibleInfoResult r = iacc_latin(l3.take(m));
        o.require(std::abs(r.value - std::log2(3.0)) <= 1e-9, "iacc_latin m=" + std::to_string(m) + " " + num(r.value));
        o.require(std::abs(*r.measurement_value - std::log2(3.0)) <= 1e-9,
                  "computational measurement m=" + std::to_string(m) + " " + num(*r.measurement_value));
    }
    std::vector<NamedSet> products = {{"product(qubit_triple(1))", product_mubs(qubit_triple(1))}};
    MubSet p3 = product_mubs(prime_mubs(3));
    for (size_t m : {2, 3, 4}) {
        products.push_back({"product(prime_mubs(3)) m=" + std::to_string(m), p3.take(m)});
    }
    double worst = 0;
    for (const auto &ns : products) {
        double half = std::log2(static_cast<double>(ns.set.dim())) / 2.0;
        AccessibleInfoResult r = iacc_covariant(ns.set, minimize_avg_entropy(ns.set, {opt.restarts, opt.seed}));
        worst = std::max({worst, std::abs(r.value - half), std::abs(*r.measurement_value - half)});
        o.require(std::abs(r.value - half) <= 1e-6, ns.name + " iacc " + num(r.value));
        o.require(std::abs(*r.measurement_value - half) <= 1e-6, ns.name + " covariant POVM " + num(*r.measurement_value));
    }
    o.detail << "latin m=2,4 give log2 3; products at m=2..4 within " << num(worst) << " of (log2 d)/2";
    return o;
}

Outcome pauli_covariance(const AcceptanceOptions &opt) {
    Outcome o;
    struct Case {
        std::string name;
        MubSet set;
        int p;
        size_t n;
    };
    std::vector<Case> cases = {{"prime_mubs(3)", prime_mubs(3), 3, 1}, {"qubit_triple(2)", qubit_triple(2), 2, 2}};
    int checked = 0;
    for (const auto &c : cases) {
        for (const auto &ps : all_pauli_strings(c.p, c.n)) {
            if (ps.is_identity()) {
                continue;
            }
            PermutationReport r = permutation_witness(c.set, ps);
            o.require(r.ok, c.name + " string " + ps.str());
            checked++;
        }
    }
    Rng rng(opt.seed + 3);
    double worst_complete = 0;
    double worst_sum = 0;
    for (const auto &c : cases) {
        for (int i = 0; i < 5; i++) {
            Povm povm = covariant_povm_from_state(random_state(c.set.dim(), rng), c.p, c.n);
            worst_complete = std::max(worst_complete, povm.completeness_defect());
            worst_sum = std::max(worst_sum, std::abs(povm.weight_sum() - static_cast<double>(c.set.dim())));
        }
    }
    o.require(checked == 8 + 15, "expected 23 nonidentity strings, saw " + std::to_string(checked));
    o.require(worst_complete <= 1e-9, "POVM completeness defect " + num(worst_complete));
    o.require(worst_sum <= 1e-9, "POVM weight sum off by " + num(worst_sum));
    o.detail << checked << " strings permute every basis; POVM completeness defect " << num(worst_complete);
    return o;
}

Outcome numerical_hygiene(const AcceptanceOptions &opt) {
    Outcome o;
    std::vector<MubSet> sets = {prime_mubs(2),  prime_mubs(3),     prime_mubs(5),     prime_mubs(7),
                                qubit_triple(1), qubit_triple(2),   qubit_triple(3),   latin_square_mubs(2),
                                latin_square_mubs(3), product_mubs(qubit_triple(1)), product_mubs(prime_mubs(3)),
                                product_mubs(latin_square_mubs(2)), product_mubs(qubit_triple(2))};
    Rng rng(opt.seed + 4);
    double worst_rel = 0;
    const double h = 1e-5;
    for (int i = 0; i < 100; i++) {
        const MubSet &s = sets[static_cast<size_t>(i) % sets.size()];
        Vector x = random_state(s.dim(), rng).amplitudes();
        Vector g = avg_entropy_gradient(s, x);
        Vector fd(x.size());
        for (Eigen::Index k = 0; k < x.size(); k++) {
            Vector e = Vector::Zero(x.size());
            e(k) = h;
            double re = (avg_entropy_value(s, x + e) - avg_entropy_value(s, x - e)) / (2 * h);
            e(k) = Complex(0, h);
            double im = (avg_entropy_value(s, x + e) - avg_entropy_value(s, x - e)) / (2 * h);
            fd(k) = Complex(re, im);
        }
        worst_rel = std::max(worst_rel, (g - fd).norm() / g.norm());
    }
    o.require(worst_rel <= 1e-5, "gradient relative error " + num(worst_rel));

    double worst_phase = 0;
    double worst_perm = 0;
    for (const auto &s : sets) {
        StateVector psi = random_state(s.dim(), rng);
        StateVector rotated(psi.amplitudes() * std::polar(1.0, 0.7));
        worst_phase = std::max(worst_phase, std::abs(avg_entropy(s, rotated) - avg_entropy(s, psi)));
        // reverse vector order inside every basis and the order of bases
        std::vector<Basis> reversed;
        for (auto it = s.bases().rbegin(); it != s.bases().rend(); ++it) {
            reversed.emplace_back(it->unitary().rowwise().reverse().eval().colwise().reverse().eval().rowwise().reverse().eval(),
                                  it->label());
        }
        MubSet shuffled(s.family(), reversed, s.metadata());
        worst_perm = std::max({worst_perm, std::abs(avg_entropy(shuffled, psi) - avg_entropy(s, psi)),
                               std::abs(avg_entropy(shuffled, psi, EntropyKind::renyi2) -
                                        avg_entropy(s, psi, EntropyKind::renyi2)),
                               std::abs(two_design_defect(shuffled) - two_design_defect(s)),
                               std::abs(check_mub(shuffled).max_deviation - check_mub(s).max_deviation)});
    }
    o.require(worst_phase <= 1e-12, "global phase changes entropy by " + num(worst_phase));
    o.require(worst_perm <= 1e-12, "reordering changes results by " + num(worst_perm));

    MubSet q = qubit_triple(2);
    MinimizationResult serial;
    MinimizationResult threaded;
    AccessibleInfoResult search_serial;
    AccessibleInfoResult search_threaded;
    Ensemble e = build_locking_ensemble(q, Prior::uniform(3, 4));
    {
        ThreadOverride one("1");
        serial = minimize_avg_entropy(q, {8, opt.seed});
        search_serial = iacc_lower_search(e, {4, opt.seed});
    }
    {
        ThreadOverride four("4");
        threaded = minimize_avg_entropy(q, {8, opt.seed});
        search_threaded = iacc_lower_search(e, {4, opt.seed});
    }
    bool same = serial.best_value == threaded.best_value && serial.best_candidate == threaded.best_candidate &&
                serial.best_state.amplitudes() == threaded.best_state.amplitudes() &&
                search_serial.value == search_threaded.value;
    o.require(same, "results depend on thread count");
    o.detail << "gradient rel. error " << num(worst_rel) << ", phase " << num(worst_phase) << ", reorder "
             << num(worst_perm) << ", 1 vs 4 threads identical";
    return o;
}

struct CriterionDef {
    const char *name;
    const char *claim;
    Outcome (*fn)(const AcceptanceOptions &);
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"construction validity", "Latin-square, Pauli and product constructions yield MUBs", construction_validity},
    {"worked example", "s=3 Latin-square vectors v_{1,l}, v_{t,1}", worked_example},
    {"2-design", "a full set of MUBs is a 2-design (fourth moment = 2)", two_design},
    {"entropic bounds", "avg H >= (log d)/2; full sets: avg H, H2 >= log((d+1)/2)", entropic_bounds},
    {"tightness, square dims", "product MUBs: min avg H = (log d)/2 at the maximally entangled state", tightness_square},
    {"tightness, latin squares", "Latin-square MUBs: min avg H = (log d)/2 at |1,1>", tightness_latin},
    {"locking, three MUBs", "I, H, K triple: I_acc = n/2 via Bell measurement", locking_three},
    {"locking, non-uniform priors", "p_t > 1/2 gives > n/2; gap <= n/2, saturated by uniform", locking_nonuniform},
    {"locking, latin & product", "more MUBs do not lock better: I_acc = (log d)/2 for all m", locking_latin_product},
    {"Pauli covariance", "Pauli strings permute MUB vectors; covariant POVM is complete", pauli_covariance},
    {"numerical hygiene", "gradient, invariance and scan-order checks", numerical_hygiene},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions &options) {
    if (id < 1 || id > kCriterionCount) {
        throw std::invalid_argument("run_criterion: id must be in 1.." + std::to_string(kCriterionCount));
    }
    const CriterionDef &def = kCriteria[id - 1];
    CriterionResult r;
    r.id = id;
    r.name = def.name;
    r.claim = def.claim;
    auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = def.fn(options);
        r.passed = o.passed;
        r.detail = o.detail.str();
    } catch (const std::exception &e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; id++) {
        out.push_back(run_criterion(id, options));
    }
    return out;
}

}  // namespace mubkit

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

// mubkit: construct MUB families, check them, and compute the entropic and
// locking quantities from the command line.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "mubkit/acceptance.h"
#include "mubkit/designs.h"
#include "mubkit/locking.h"
#include "mubkit/mubs.h"
#include "mubkit/serialize.h"
#include "mubkit/uncertainty.h"

namespace {

using mubkit::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

/// Input the user can fix: bad flags, incompatible family, unreadable files.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Json &j) { std::cout << j.dump(2) << "\n"; }

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", mubkit::round15(x));
    return buf;
}

mubkit::MubSet load(const std::string &path) {
    try {
        return mubkit::read_mubset_file(path);
    } catch (const std::exception &e) {
        throw UsageError(path + ": " + e.what());
    }
}

// ---- construct ----

struct ConstructArgs {
    std::string family;
    std::string base;
    int dim = 0;
    int s = 0;
    int n = 0;
    size_t take = 0;
    std::string out;
};

mubkit::MubSet build_family(const std::string &family, const ConstructArgs &a) {
    if (family == "prime") {
        if (a.dim <= 0) throw UsageError("--family prime needs --dim");
        return mubkit::prime_mubs(a.dim);
    }
    if (family == "qubit-triple") {
        if (a.n <= 0) throw UsageError("--family qubit-triple needs --n");
        return mubkit::qubit_triple(a.n);
    }
    if (family == "latin") {
        if (a.s <= 0) throw UsageError("--family latin needs --s");
        return mubkit::latin_square_mubs(a.s);
    }
    throw UsageError("unknown family '" + family + "'");
}

int cmd_construct(const ConstructArgs &a) {
    mubkit::MubSet set = [&] {
        try {
            if (a.family == "product") {
                if (a.base.empty()) throw UsageError("--family product needs --base");
                if (a.base == "product") throw UsageError("--base must be prime, qubit-triple or latin");
                return mubkit::product_mubs(build_family(a.base, a));
            }
            return build_family(a.family, a);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }();
    if (a.take > 0) {
        if (a.take < 2 || a.take > set.size()) {
            throw UsageError("--take must be between 2 and " + std::to_string(set.size()));
        }
        set = set.take(a.take);
    }
    std::string text = mubkit::to_json(set).dump() + "\n";
    if (a.out.empty()) {
        std::cout << text;
    } else {
        mubkit::write_text_file(a.out, text);
    }
    return kOk;
}

// ---- check ----

int cmd_check(const std::string &path, const std::string &what) {
    mubkit::MubSet set = load(path);
    Json report;
    bool pass = false;
    if (what == "mub") {
        mubkit::CertificateReport r = mubkit::check_mub(set);
        pass = r.pass;
        report = Json{{"what", what}, {"report", mubkit::to_json(r)}, {"pass", pass}};
    } else if (what == "design") {
        double defect = mubkit::two_design_defect(set);
        pass = defect <= mubkit::TOL_MUB;
        report = Json{{"what", what},
                      {"dim", set.dim()},
                      {"bases", set.size()},
                      {"defect", mubkit::round15(defect)},
                      {"tol", mubkit::TOL_MUB},
                      {"pass", pass}};
    } else {
        auto layout = mubkit::pauli_layout(set);
        if (!layout) {
            throw UsageError("pauli-perm needs a prime, qubit-triple or product-of-Pauli set");
        }
        Json strings = Json::array();
        pass = true;
        for (const auto &ps : mubkit::all_pauli_strings(layout->p, layout->qudits)) {
            if (ps.is_identity()) continue;
            mubkit::PermutationReport r = mubkit::permutation_witness(set, ps);
            pass = pass && r.ok;
            strings.push_back(mubkit::to_json(r));
        }
        report = Json{{"what", what},
                      {"p", layout->p},
                      {"qudits", layout->qudits},
                      {"count", strings.size()},
                      {"permutations", strings},
                      {"pass", pass}};
    }
    emit(report);
    return pass ? kOk : kCheckFailed;
}

// ---- entropy-min ----

int cmd_entropy_min(const std::string &path, int restarts, uint64_t seed, double tol, const std::string &format) {
    mubkit::MubSet set = load(path);
    mubkit::MinimizeOptions opts;
    opts.restarts = restarts;
    opts.seed = seed;
    opts.tol = tol;
    mubkit::MinimizationResult r = mubkit::minimize_avg_entropy(set, opts);
    mubkit::TightnessCertificate c = mubkit::certify_tightness(set, r);

    if (format == "json") {
        emit(Json{{"dim", set.dim()},
                  {"bases", set.size()},
                  {"family", mubkit::to_string(set.family())},
                  {"bound", mubkit::round15(c.lower_bound)},
                  {"achieved", mubkit::round15(c.achieved)},
                  {"achieved_sum", mubkit::round15(c.achieved * static_cast<double>(set.size()))},
                  {"gap", mubkit::round15(c.gap)},
                  {"verdict", c.tight ? "tight" : "not-tight"},
                  {"certificate", mubkit::to_json(c)},
                  {"minimization", mubkit::to_json(r)}});
    } else if (format == "csv") {
        std::cout << "quantity,value\n";
        std::cout << "bound," << fmt(c.lower_bound) << "\n";
        std::cout << "achieved," << fmt(c.achieved) << "\n";
        std::cout << "achieved_sum," << fmt(c.achieved * static_cast<double>(set.size())) << "\n";
        std::cout << "gap," << fmt(c.gap) << "\n";
        std::cout << "verdict," << (c.tight ? "tight" : "not-tight") << "\n";
        if (c.full_set_bound) std::cout << "full_set_bound," << fmt(*c.full_set_bound) << "\n";
        std::cout << "restarts_used," << r.restarts_used << "\n";
        std::cout << "converged," << (r.converged ? "true" : "false") << "\n";
        std::cout << "witness_match," << r.witness_match.value_or("") << "\n";
    } else {
        std::cout << "d = " << set.dim() << ", m = " << set.size() << "\n";
        std::cout << "bound (log2 d)/2    " << fmt(c.lower_bound) << "\n";
        std::cout << "achieved            " << fmt(c.achieved) << "\n";
        std::cout << "sum over bases      " << fmt(c.achieved * static_cast<double>(set.size())) << "\n";
        std::cout << "gap                 " << fmt(c.gap) << "\n";
        if (c.full_set_bound) std::cout << "full-set bound      " << fmt(*c.full_set_bound) << "\n";
        std::cout << "verdict             " << (c.tight ? "tight" : "not-tight") << "\n";
        if (r.witness_match) std::cout << "witness             " << *r.witness_match << "\n";
    }
    return kOk;
}

// ---- iacc ----

mubkit::Prior load_prior(const std::string &source, const mubkit::MubSet &set) {
    if (source == "uniform") return mubkit::Prior::uniform(set.size(), set.dim());
    try {
        std::ifstream in(source);
        if (!in) throw std::invalid_argument("cannot open file");
        mubkit::Prior p = mubkit::prior_from_json(Json::parse(in));
        if (p.bases() != set.size() || p.dim() != set.dim()) {
            throw std::invalid_argument("prior shape does not match the set");
        }
        return p;
    } catch (const std::exception &e) {
        throw UsageError(source + ": " + e.what());
    }
}

int cmd_iacc(const std::string &path, const std::string &prior_source, const std::string &mode, uint64_t seed,
             int restarts) {
    mubkit::MubSet set = load(path);
    mubkit::Prior prior = load_prior(prior_source, set);
    mubkit::Ensemble e = mubkit::build_locking_ensemble(set, prior);

    mubkit::AccessibleInfoResult r;
    if (mode == "covariant") {
        if (!prior.is_uniform()) throw UsageError("covariant mode needs the uniform prior");
        if (!mubkit::pauli_layout(set)) throw UsageError("covariant mode needs a Pauli-covariant set");
        r = mubkit::iacc_covariant(set, mubkit::minimize_avg_entropy(set, {restarts, seed}));
    } else if (mode == "latin") {
        if (!prior.is_uniform()) throw UsageError("latin mode needs the uniform prior");
        if (set.family() != mubkit::Family::latin_square) throw UsageError("latin mode needs a latin-square set");
        r = mubkit::iacc_latin(set);
    } else {
        mubkit::SearchOptions opts;
        opts.restarts = restarts;
        opts.seed = seed;
        r = mubkit::iacc_lower_search(e, opts);
    }

    Json out{{"dim", set.dim()},
             {"bases", set.size()},
             {"family", mubkit::to_string(set.family())},
             {"mode", mode},
             {"prior", prior.is_uniform() ? Json("uniform") : mubkit::to_json(prior)},
             {"result", mubkit::to_json(r)}};
    if (set.family() == mubkit::Family::qubit_triple && prior.is_uniform()) {
        double unlocked = mubkit::unlocked_info(e);
        double revealed = std::log2(static_cast<double>(set.size()));
        out["unlocked_info"] = mubkit::round15(unlocked);
        out["contrast"] = Json{{"locked", mubkit::round15(r.value)},
                               {"unlocked", mubkit::round15(unlocked)},
                               {"revealed_bits", mubkit::round15(revealed)},
                               {"gain", mubkit::round15(unlocked - r.value)}};
    }
    emit(out);
    return kOk;
}

// ---- gap ----

int cmd_gap(int n, const std::string &prior_kind, int trials, uint64_t seed) {
    if (n <= 0 || n % 2 != 0) throw UsageError("--n must be a positive even integer");
    if (trials <= 0) throw UsageError("--trials must be positive");
    mubkit::MubSet set = mubkit::qubit_triple(n);
    Json reports = Json::array();
    double max_gap1 = -1e300;
    double max_delta = -1e300;
    auto record = [&](const mubkit::Ensemble &e, const mubkit::GapReport &g) {
        Json j = mubkit::to_json(g);
        j["basis_prior"] = Json::array();
        for (double w : e.prior.basis_marginal()) j["basis_prior"].push_back(mubkit::round15(w));
        reports.push_back(j);
        max_gap1 = std::max(max_gap1, g.gap1_bound);
        max_delta = std::max(max_delta, g.delta_upper_bound);
    };
    if (prior_kind == "uniform") {
        mubkit::Ensemble e = mubkit::build_locking_ensemble(set, mubkit::Prior::uniform(3, set.dim()));
        record(e, mubkit::locking_gap(e));
    } else {
        mubkit::Rng rng(seed);
        for (int i = 0; i < trials; i++) {
            mubkit::Ensemble e =
                mubkit::build_locking_ensemble(set, mubkit::random_prior(3, set.dim(), rng, 0.5));
            record(e, mubkit::locking_gap(e));
        }
    }
    emit(Json{{"n", n},
              {"prior", prior_kind},
              {"trials", reports},
              {"max_gap1_bound", mubkit::round15(max_gap1)},
              {"max_delta_upper_bound", mubkit::round15(max_delta)},
              {"final_bound", mubkit::round15(n / 2.0)}});
    return kOk;
}

// ---- reproduce ----

int cmd_reproduce(uint64_t seed, int restarts, const std::string &format) {
    mubkit::AcceptanceOptions opts;
    opts.seed = seed;
    opts.restarts = restarts;
    bool all = true;
    Json rows = Json::array();
    if (format == "text") {
        std::printf("%-3s %-28s %-5s %s\n", "#", "criterion", "", "detail");
    }
    for (int id = 1; id <= mubkit::kCriterionCount; id++) {
        mubkit::CriterionResult r = mubkit::run_criterion(id, opts);
        all = all && r.passed;
        if (format == "text") {
            std::printf("%-3d %-28s %-5s %s\n", r.id, r.name.c_str(), r.passed ? "PASS" : "FAIL", r.detail.c_str());
            std::fflush(stdout);
        } else {
            rows.push_back(Json{{"id", r.id},
                                {"name", r.name},
                                {"claim", r.claim},
                                {"pass", r.passed},
                                {"detail", r.detail}});
        }
    }
    if (format == "json") emit(Json{{"criteria", rows}, {"pass", all}});
    return all ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"mubkit: mutually unbiased bases, entropic uncertainty and locking"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto *construct = app.add_subcommand("construct", "Build a MUB family and write it as JSON");
    construct->add_option("--family", ca.family, "Family")
        ->required()
        ->check(CLI::IsMember({"prime", "qubit-triple", "latin", "product"}));
    construct->add_option("--base", ca.base, "Base family for --family product")
        ->check(CLI::IsMember({"prime", "qubit-triple", "latin"}));
    construct->add_option("--dim", ca.dim, "Prime dimension d");
    construct->add_option("--s", ca.s, "Prime side s of the Latin squares");
    construct->add_option("--n", ca.n, "Qubit count n");
    construct->add_option("--take", ca.take, "Keep only the first m bases");
    construct->add_option("--out", ca.out, "Output path (default stdout)");

    std::string path;
    std::string what = "mub";
    auto *check = app.add_subcommand("check", "Verify a MUB set");
    check->add_option("path", path, "MubSet JSON")->required();
    check->add_option("--what", what, "Check to run")->check(CLI::IsMember({"mub", "design", "pauli-perm"}));

    int restarts = 64;
    uint64_t seed = 0;
    double tol = 1e-7;
    std::string format = "json";
    auto *emin = app.add_subcommand("entropy-min", "Minimize the average entropy and certify tightness");
    emin->add_option("path", path, "MubSet JSON")->required();
    emin->add_option("--restarts", restarts, "Random restarts")->check(CLI::PositiveNumber);
    emin->add_option("--seed", seed, "Seed");
    emin->add_option("--tol", tol, "Gradient-norm tolerance")->check(CLI::PositiveNumber);
    emin->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

    std::string prior = "uniform";
    std::string mode = "covariant";
    auto *iacc = app.add_subcommand("iacc", "Accessible information of the ensemble built from a set");
    iacc->add_option("path", path, "MubSet JSON")->required();
    iacc->add_option("--prior", prior, "'uniform' or a JSON file {\"weights\": [[...], ...]}");
    iacc->add_option("--mode", mode, "Method")->check(CLI::IsMember({"covariant", "latin", "search"}));
    iacc->add_option("--seed", seed, "Seed");
    iacc->add_option("--restarts", restarts, "Restarts")->check(CLI::PositiveNumber);

    int n = 2;
    int trials = 50;
    std::string gap_prior = "uniform";
    auto *gap = app.add_subcommand("gap", "Locking gap chain for the qubit triple");
    gap->add_option("--n", n, "Even qubit count")->required();
    gap->add_option("--prior", gap_prior, "Prior")->check(CLI::IsMember({"uniform", "random"}));
    gap->add_option("--trials", trials, "Random priors to draw");
    gap->add_option("--seed", seed, "Seed");

    uint64_t acc_seed = mubkit::AcceptanceOptions{}.seed;
    int acc_restarts = mubkit::AcceptanceOptions{}.restarts;
    std::string acc_format = "text";
    auto *reproduce = app.add_subcommand("reproduce", "Run the acceptance suite and print a pass/fail table");
    reproduce->add_option("--seed", acc_seed, "Seed");
    reproduce->add_option("--restarts", acc_restarts, "Minimizer restarts")->check(CLI::PositiveNumber);
    reproduce->add_option("--format", acc_format, "Output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*construct) return cmd_construct(ca);
        if (*check) return cmd_check(path, what);
        if (*emin) return cmd_entropy_min(path, restarts, seed, tol, format);
        if (*iacc) return cmd_iacc(path, prior, mode, seed, restarts);
        if (*gap) return cmd_gap(n, gap_prior, trials, seed);
        if (*reproduce) return cmd_reproduce(acc_seed, acc_restarts, acc_format);
    } catch (const UsageError &e) {
        std::cerr << "mubkit: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "mubkit: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "mubkit: internal error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

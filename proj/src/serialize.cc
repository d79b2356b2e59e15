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

#include "mubkit/serialize.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mubkit {

namespace {

Json complex_json(Complex c) {
    return Json::array({round15(c.real()), round15(c.imag())});
}

Json vector_json(const Vector &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); i++) {
        out.push_back(complex_json(v(i)));
    }
    return out;
}

template <typename T>
Json optional_json(const std::optional<T> &v) {
    return v ? Json(*v) : Json(nullptr);
}

Json optional_real(const std::optional<double> &v) {
    return v ? Json(round15(*v)) : Json(nullptr);
}

}  // namespace

double round15(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    double r = std::strtod(buf, nullptr);
    return r == 0 ? 0.0 : r;  // drop negative zero
}

Json to_json(const LatinSquare &sq) {
    return Json{{"side", sq.side()}, {"kind", to_string(sq.kind())}, {"cells", sq.cells()}};
}

LatinSquare latin_square_from_json(const Json &j) {
    try {
        auto cells = j.at("cells").get<std::vector<std::vector<int>>>();
        if (j.at("side").get<size_t>() != cells.size()) {
            throw std::invalid_argument("square side does not match cells");
        }
        return LatinSquare(square_kind_from_string(j.at("kind").get<std::string>()), std::move(cells));
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed square JSON: ") + e.what());
    }
}

Json to_json(const MubSet &set) {
    Json bases = Json::array();
    for (const auto &b : set.bases()) {
        Json vecs = Json::array();
        for (Eigen::Index k = 0; k < b.unitary().cols(); k++) {
            vecs.push_back(vector_json(b.unitary().col(k)));
        }
        bases.push_back(std::move(vecs));
    }
    return Json{{"dim", set.dim()}, {"family", to_string(set.family())}, {"metadata", set.metadata()}, {"bases", bases}};
}

MubSet mubset_from_json(const Json &j) {
    try {
        auto d = j.at("dim").get<size_t>();
        Family family = family_from_string(j.at("family").get<std::string>());
        std::string metadata = j.value("metadata", std::string());
        const Json &bases_json = j.at("bases");
        if (!bases_json.is_array() || bases_json.empty() || d == 0) {
            throw std::invalid_argument("malformed MubSet JSON: need dim > 0 and a nonempty bases array");
        }
        std::vector<std::string> labels;
        {
            auto pos = metadata.find("labels=");
            if (pos != std::string::npos) {
                std::string rest = metadata.substr(pos + 7);
                rest = rest.substr(0, rest.find(';'));
                std::stringstream ss(rest);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    labels.push_back(item);
                }
            }
        }
        std::vector<Basis> bases;
        auto n = static_cast<Eigen::Index>(d);
        for (size_t t = 0; t < bases_json.size(); t++) {
            const Json &bj = bases_json[t];
            if (!bj.is_array() || bj.size() != d) {
                throw std::invalid_argument("malformed MubSet JSON: basis " + std::to_string(t) + " needs d vectors");
            }
            Matrix u(n, n);
            for (Eigen::Index k = 0; k < n; k++) {
                const Json &vj = bj[static_cast<size_t>(k)];
                if (!vj.is_array() || vj.size() != d) {
                    throw std::invalid_argument("malformed MubSet JSON: vector needs d amplitudes");
                }
                for (Eigen::Index i = 0; i < n; i++) {
                    const Json &aj = vj[static_cast<size_t>(i)];
                    if (!aj.is_array() || aj.size() != 2) {
                        throw std::invalid_argument("malformed MubSet JSON: amplitude must be [re, im]");
                    }
                    u(i, k) = Complex(aj[0].get<double>(), aj[1].get<double>());
                }
            }
            std::string label = t < labels.size() ? labels[t] : "B" + std::to_string(t + 1);
            bases.emplace_back(std::move(u), label);
        }
        return MubSet(family, std::move(bases), metadata);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed MubSet JSON: ") + e.what());
    }
}

Json to_json(const StateVector &psi) {
    return vector_json(psi.amplitudes());
}

Json to_json(const CertificateReport &r) {
    Json pairs = Json::array();
    for (const auto &p : r.pairs) {
        pairs.push_back(Json{{"bases", {p.first, p.second}}, {"max_deviation", round15(p.max_deviation)}});
    }
    Json offending = Json::array();
    for (const auto &p : r.offending) {
        offending.push_back(Json{{"bases", {p.first, p.second}}, {"max_deviation", round15(p.max_deviation)}});
    }
    Json defects = Json::array();
    for (double v : r.orthonormality_defects) {
        defects.push_back(round15(v));
    }
    return Json{{"check", "mub"},
                {"dim", r.dim},
                {"bases", r.bases},
                {"tol", r.tol},
                {"orthonormality_defects", defects},
                {"max_orthonormality_defect", round15(r.max_orthonormality_defect)},
                {"max_deviation", round15(r.max_deviation)},
                {"pairs", pairs},
                {"offending_pairs", offending},
                {"pass", r.pass}};
}

Json to_json(const PermutationReport &r) {
    Json perms = Json::array();
    for (const auto &perm : r.permutations) {
        Json one = Json::array();
        for (size_t k : perm) {
            one.push_back(k + 1);  // 1-based vector labels
        }
        perms.push_back(one);
    }
    return Json{{"string", r.string.str()},
                {"a", r.string.a},
                {"b", r.string.b},
                {"permutations", perms},
                {"failures", r.failures},
                {"ok", r.ok}};
}

Json to_json(const MinimizationResult &r) {
    return Json{{"best_value", round15(r.best_value)},
                {"best_state", to_json(r.best_state)},
                {"restarts_used", r.restarts_used},
                {"converged", r.converged},
                {"gradient_norm_at_solution", round15(r.gradient_norm_at_solution)},
                {"witness_match", optional_json(r.witness_match)},
                {"best_candidate", r.best_candidate}};
}

Json to_json(const TightnessCertificate &c) {
    return Json{{"lower_bound", round15(c.lower_bound)},
                {"achieved", round15(c.achieved)},
                {"gap", round15(c.gap)},
                {"tol_cert", c.tol_cert},
                {"verdict", c.tight ? "tight" : "not-tight"},
                {"full_set_bound", optional_real(c.full_set_bound)}};
}

Json to_json(const AccessibleInfoResult &r) {
    return Json{{"value", round15(r.value)},
                {"kind", to_string(r.kind)},
                {"certificate", r.certificate},
                {"measurement_value", optional_real(r.measurement_value)},
                {"upper_bound", optional_real(r.upper_bound)}};
}

Json to_json(const GapReport &g) {
    return Json{{"n", g.n},
                {"joint_entropy", round15(g.joint_entropy)},
                {"basis_entropy", round15(g.basis_entropy)},
                {"mu_entropy", round15(g.mu_entropy)},
                {"nu_entropy", round15(g.nu_entropy)},
                {"measurement_info", round15(g.measurement_info)},
                {"gap1_bound", round15(g.gap1_bound)},
                {"delta_upper_bound", round15(g.delta_upper_bound)},
                {"final_bound", round15(g.final_bound)},
                {"exact", g.exact},
                {"iacc", optional_real(g.iacc)},
                {"delta", optional_real(g.delta)}};
}

Json to_json(const Prior &p) {
    Json rows = Json::array();
    for (size_t t = 0; t < p.bases(); t++) {
        Json row = Json::array();
        for (size_t k = 0; k < p.dim(); k++) {
            row.push_back(round15(p(t, k)));
        }
        rows.push_back(row);
    }
    return Json{{"weights", rows}};
}

Json to_json(const Ensemble &e) {
    return Json{{"dim", e.dim()}, {"size", e.size()}, {"prior", to_json(e.prior)["weights"]}, {"source", to_json(e.source)}};
}

Prior prior_from_json(const Json &j) {
    try {
        auto rows = j.at("weights").get<std::vector<std::vector<double>>>();
        if (rows.empty()) {
            throw std::invalid_argument("prior JSON: weights must be nonempty");
        }
        std::vector<double> flat;
        for (const auto &row : rows) {
            if (row.size() != rows.front().size()) {
                throw std::invalid_argument("prior JSON: ragged weights");
            }
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return Prior(rows.size(), rows.front().size(), std::move(flat));
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed prior JSON: ") + e.what());
    }
}

MubSet read_mubset_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read '" + path + "'");
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
    return mubset_from_json(j);
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot write '" + path + "'");
    }
    out << text;
}

}  // namespace mubkit

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

#include "mubkit/designs.h"

#include <cmath>
#include <stdexcept>

namespace mubkit {

double two_design_defect(const MubSet &set) {
    auto d = static_cast<Eigen::Index>(set.dim());
    Matrix acc = Matrix::Zero(d * d, d * d);
    // Fixed (t, k) order keeps the reduction bitwise reproducible.
    for (const auto &b : set.bases()) {
        for (Eigen::Index k = 0; k < d; k++) {
            Vector v = b.unitary().col(k);
            Vector vv = tensor(v, v);
            acc.noalias() += vv * vv.adjoint();
        }
    }
    acc /= static_cast<double>(set.size() * set.dim());
    Matrix target = sym_projector(set.dim()).matrix() / (static_cast<double>(d * (d + 1)) / 2.0);
    return max_abs(acc - target);
}

double fourth_moment(const MubSet &set, const StateVector &psi) {
    if (set.dim() != psi.dim()) {
        throw std::invalid_argument("fourth_moment: dimension mismatch");
    }
    double s = 0;
    for (const auto &b : set.bases()) {
        Vector c = b.unitary().adjoint() * psi.amplitudes();
        for (Eigen::Index k = 0; k < c.size(); k++) {
            double p = std::norm(c(k));
            s += p * p;
        }
    }
    return s;
}

}  // namespace mubkit

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

#include "mubkit/random.h"

namespace mubkit {

StateVector random_state(size_t d, Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector v(static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < v.size(); i++) {
        double re = g(rng);
        double im = g(rng);
        v(i) = Complex(re, im);
    }
    return StateVector::normalized(v);
}

Matrix random_hermitian(size_t d, Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    auto n = static_cast<Eigen::Index>(d);
    Matrix a(n, n);
    for (Eigen::Index i = 0; i < a.size(); i++) {
        double re = g(rng);
        double im = g(rng);
        a.data()[i] = Complex(re, im);
    }
    return (a + a.adjoint()) / 2.0;
}

Operator random_unitary(size_t d, Rng &rng) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(random_hermitian(d, rng));
    Vector phases = (Complex(0, 1) * es.eigenvalues().cast<Complex>()).array().exp();
    return Operator(es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint());
}

}  // namespace mubkit

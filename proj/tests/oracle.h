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

// Naive reference computations used to cross-check the library. Kept
// deliberately loop-based and free of library helpers.

#ifndef MUBKIT_TESTS_ORACLE_H
#define MUBKIT_TESTS_ORACLE_H

#include <cmath>
#include <complex>
#include <vector>

#include "mubkit/linalg.h"

namespace oracle {

using mubkit::Complex;
using mubkit::Matrix;
using mubkit::Vector;

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); i++)
        for (int j = 0; j < a.cols(); j++)
            for (int k = 0; k < b.rows(); k++)
                for (int l = 0; l < b.cols(); l++) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

inline double shannon_bits(const std::vector<double> &p) {
    double h = 0;
    for (double x : p)
        if (x > 0) h -= x * std::log(x) / std::log(2.0);
    return h;
}

inline double overlap2(const Matrix &basis, int k, const Vector &psi) {
    Complex s = 0;
    for (int i = 0; i < psi.size(); i++) s += std::conj(basis(i, k)) * psi(i);
    return std::norm(s);
}

/// I(X;Y) for joint P(x, y) given as rows x, columns y.
inline double mutual_information(const std::vector<std::vector<double>> &joint) {
    std::vector<double> px(joint.size(), 0.0), py(joint[0].size(), 0.0);
    for (size_t x = 0; x < joint.size(); x++)
        for (size_t y = 0; y < joint[x].size(); y++) {
            px[x] += joint[x][y];
            py[y] += joint[x][y];
        }
    double i = 0;
    for (size_t x = 0; x < joint.size(); x++)
        for (size_t y = 0; y < joint[x].size(); y++)
            if (joint[x][y] > 0) i += joint[x][y] * std::log2(joint[x][y] / (px[x] * py[y]));
    return i;
}

}  // namespace oracle

#endif

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

#ifndef MUBKIT_SQUARES_H
#define MUBKIT_SQUARES_H

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mubkit {

enum class SquareKind { latin, row_square, column_square };

std::string to_string(SquareKind kind);
SquareKind square_kind_from_string(const std::string &name);

/// An s x s array over the symbols 1..s.
///
/// Rows and columns are 0-based in the API; symbols are 1-based.
class LatinSquare {
   public:
    /// Throws std::invalid_argument if the cells violate the invariant of `kind`.
    LatinSquare(SquareKind kind, std::vector<std::vector<int>> cells);

    size_t side() const { return cells_.size(); }
    SquareKind kind() const { return kind_; }
    int cell(size_t row, size_t col) const { return cells_[row][col]; }
    const std::vector<std::vector<int>> &cells() const { return cells_; }

    /// Cells holding `symbol`, sorted by (row, column).
    std::vector<std::pair<size_t, size_t>> cells_with(int symbol) const;

    bool operator==(const LatinSquare &other) const = default;

   private:
    SquareKind kind_;
    std::vector<std::vector<int>> cells_;
};

bool is_prime(long long n);

/// The affine family L^(k)(i, j) = k*i + j mod s (0-based, shifted to symbols 1..s), k = 1..s-1.
std::vector<LatinSquare> mols_prime(int s);

/// True iff the s^2 ordered pairs (L(i,j), M(i,j)) are pairwise distinct.
bool are_orthogonal(const LatinSquare &l, const LatinSquare &m);

struct ExtraSquares {
    LatinSquare row_square;
    LatinSquare column_square;
};

ExtraSquares extra_squares(int s);

}  // namespace mubkit

#endif

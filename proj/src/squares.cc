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

#include "mubkit/squares.h"

#include <stdexcept>

namespace mubkit {

std::string to_string(SquareKind kind) {
    switch (kind) {
        case SquareKind::latin:
            return "latin";
        case SquareKind::row_square:
            return "row_square";
        case SquareKind::column_square:
            return "column_square";
    }
    throw std::invalid_argument("unknown SquareKind");
}

SquareKind square_kind_from_string(const std::string &name) {
    if (name == "latin") {
        return SquareKind::latin;
    }
    if (name == "row_square") {
        return SquareKind::row_square;
    }
    if (name == "column_square") {
        return SquareKind::column_square;
    }
    throw std::invalid_argument("unknown square kind '" + name + "'");
}

LatinSquare::LatinSquare(SquareKind kind, std::vector<std::vector<int>> cells) : kind_(kind), cells_(std::move(cells)) {
    size_t s = cells_.size();
    if (s < 2) {
        throw std::invalid_argument("LatinSquare: side must be at least 2");
    }
    for (const auto &row : cells_) {
        if (row.size() != s) {
            throw std::invalid_argument("LatinSquare: cells must form an s x s array");
        }
        for (int v : row) {
            if (v < 1 || static_cast<size_t>(v) > s) {
                throw std::invalid_argument("LatinSquare: symbol outside 1..s");
            }
        }
    }
    for (size_t i = 0; i < s; i++) {
        std::vector<bool> in_row(s + 1, false);
        std::vector<bool> in_col(s + 1, false);
        for (size_t j = 0; j < s; j++) {
            int r = cells_[i][j];
            int c = cells_[j][i];
            switch (kind_) {
                case SquareKind::latin:
                    if (in_row[static_cast<size_t>(r)] || in_col[static_cast<size_t>(c)]) {
                        throw std::invalid_argument("LatinSquare: repeated symbol in a row or column");
                    }
                    in_row[static_cast<size_t>(r)] = true;
                    in_col[static_cast<size_t>(c)] = true;
                    break;
                case SquareKind::row_square:
                    if (r != static_cast<int>(i) + 1) {
                        throw std::invalid_argument("LatinSquare: row square must hold symbol i+1 in row i");
                    }
                    break;
                case SquareKind::column_square:
                    if (c != static_cast<int>(i) + 1) {
                        throw std::invalid_argument("LatinSquare: column square must hold symbol j+1 in column j");
                    }
                    break;
            }
        }
    }
}

std::vector<std::pair<size_t, size_t>> LatinSquare::cells_with(int symbol) const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < side(); i++) {
        for (size_t j = 0; j < side(); j++) {
            if (cells_[i][j] == symbol) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

bool is_prime(long long n) {
    if (n < 2) {
        return false;
    }
    for (long long q = 2; q * q <= n; q++) {
        if (n % q == 0) {
            return false;
        }
    }
    return true;
}

std::vector<LatinSquare> mols_prime(int s) {
    if (!is_prime(s)) {
        throw std::invalid_argument("mols_prime: side " + std::to_string(s) + " is not prime");
    }
    auto n = static_cast<size_t>(s);
    std::vector<LatinSquare> out;
    for (size_t k = 1; k < n; k++) {
        std::vector<std::vector<int>> cells(n, std::vector<int>(n));
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < n; j++) {
                cells[i][j] = static_cast<int>((k * i + j) % n) + 1;
            }
        }
        out.emplace_back(SquareKind::latin, std::move(cells));
    }
    return out;
}

bool are_orthogonal(const LatinSquare &l, const LatinSquare &m) {
    if (l.side() != m.side()) {
        throw std::invalid_argument("are_orthogonal: side mismatch");
    }
    size_t s = l.side();
    std::vector<bool> seen(s * s, false);
    for (size_t i = 0; i < s; i++) {
        for (size_t j = 0; j < s; j++) {
            size_t key = static_cast<size_t>(l.cell(i, j) - 1) * s + static_cast<size_t>(m.cell(i, j) - 1);
            if (seen[key]) {
                return false;
            }
            seen[key] = true;
        }
    }
    return true;
}

ExtraSquares extra_squares(int s) {
    if (s < 2) {
        throw std::invalid_argument("extra_squares: side must be at least 2");
    }
    auto n = static_cast<size_t>(s);
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    std::vector<std::vector<int>> cols(n, std::vector<int>(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            rows[i][j] = static_cast<int>(i) + 1;
            cols[i][j] = static_cast<int>(j) + 1;
        }
    }
    return {LatinSquare(SquareKind::row_square, std::move(rows)), LatinSquare(SquareKind::column_square, std::move(cols))};
}

}  // namespace mubkit

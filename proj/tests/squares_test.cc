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

#include <gtest/gtest.h>

#include <set>

using namespace mubkit;

TEST(LatinSquare, s3_first_square_matches_hand_written) {
    std::vector<LatinSquare> sq = mols_prime(3);
    ASSERT_EQ(sq.size(), 2u);
    std::vector<std::vector<int>> expected = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    EXPECT_EQ(sq[0].cells(), expected);
    auto cells = sq[0].cells_with(1);
    std::vector<std::pair<size_t, size_t>> want = {{0, 0}, {1, 2}, {2, 1}};
    EXPECT_EQ(cells, want);
}

TEST(LatinSquare, validation) {
    EXPECT_THROW(LatinSquare(SquareKind::latin, {{1, 2}, {1, 2}}), std::invalid_argument);
    EXPECT_THROW(LatinSquare(SquareKind::latin, {{1, 3}, {2, 1}}), std::invalid_argument);
    EXPECT_THROW(LatinSquare(SquareKind::latin, {{1, 2}, {2}}), std::invalid_argument);
    EXPECT_NO_THROW(LatinSquare(SquareKind::row_square, {{1, 1}, {2, 2}}));
    EXPECT_THROW(LatinSquare(SquareKind::row_square, {{1, 2}, {2, 1}}), std::invalid_argument);
    EXPECT_NO_THROW(LatinSquare(SquareKind::column_square, {{1, 2}, {1, 2}}));
}

TEST(LatinSquare, orthogonality_for_prime_sides) {
    for (int s : {2, 3, 5, 7, 11, 13}) {
        std::vector<LatinSquare> all = mols_prime(s);
        ASSERT_EQ(all.size(), size_t(s - 1));
        ExtraSquares ex = extra_squares(s);
        all.push_back(ex.row_square);
        all.push_back(ex.column_square);
        for (size_t a = 0; a < all.size(); a++) {
            for (size_t b = a + 1; b < all.size(); b++) {
                // independent pair-distinctness count
                std::set<std::pair<int, int>> pairs;
                for (int i = 0; i < s; i++)
                    for (int j = 0; j < s; j++) pairs.insert({all[a].cell(i, j), all[b].cell(i, j)});
                EXPECT_EQ(pairs.size(), size_t(s * s));
                EXPECT_TRUE(are_orthogonal(all[a], all[b]));
            }
        }
    }
}

TEST(LatinSquare, square_not_orthogonal_to_itself) {
    LatinSquare l = mols_prime(3)[0];
    EXPECT_FALSE(are_orthogonal(l, l));
}

TEST(LatinSquare, non_prime_rejected) {
    EXPECT_THROW(mols_prime(4), std::invalid_argument);
    EXPECT_THROW(mols_prime(1), std::invalid_argument);
    EXPECT_FALSE(is_prime(9));
    EXPECT_TRUE(is_prime(13));
}

TEST(LatinSquare, kind_names_round_trip) {
    for (auto k : {SquareKind::latin, SquareKind::row_square, SquareKind::column_square})
        EXPECT_EQ(square_kind_from_string(to_string(k)), k);
}

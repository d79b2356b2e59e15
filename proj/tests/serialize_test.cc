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

#include <gtest/gtest.h>

#include "mubkit/parallel.h"

#include <atomic>
#include <cstdlib>

using namespace mubkit;

TEST(Serialize, mubset_round_trip) {
    for (const MubSet &s : {prime_mubs(5), latin_square_mubs(3), product_mubs(qubit_triple(1))}) {
        Json j = to_json(s);
        MubSet back = mubset_from_json(Json::parse(j.dump()));
        EXPECT_EQ(back.family(), s.family());
        EXPECT_EQ(back.metadata(), s.metadata());
        ASSERT_EQ(back.size(), s.size());
        for (size_t t = 0; t < s.size(); t++) {
            EXPECT_EQ(back.basis(t).label(), s.basis(t).label());
            EXPECT_LE(max_abs(back.basis(t).unitary() - s.basis(t).unitary()), 1e-14);
        }
        EXPECT_EQ(to_json(back).dump(), j.dump());
    }
}

TEST(Serialize, malformed_input) {
    EXPECT_THROW(mubset_from_json(Json::parse("{}")), std::invalid_argument);
    Json j = to_json(prime_mubs(2));
    j["bases"][0][0][0] = "x";
    EXPECT_THROW(mubset_from_json(j), std::invalid_argument);
    Json k = to_json(prime_mubs(2));
    k["bases"][1][0][1] = Json::array({5, 0});  // breaks normalization
    EXPECT_THROW(mubset_from_json(k), std::invalid_argument);
}

TEST(Serialize, latin_square_round_trip) {
    LatinSquare l = mols_prime(5)[2];
    EXPECT_EQ(latin_square_from_json(to_json(l)), l);
}

TEST(Serialize, prior_round_trip) {
    Prior p = Prior::from_basis_weights({0.2, 0.2, 0.6}, 2);
    Prior back = prior_from_json(to_json(p));
    EXPECT_EQ(back.weights(), p.weights());
    EXPECT_THROW(prior_from_json(Json::parse(R"({"weights": [[0.5], [0.6]]})")), std::invalid_argument);
}

TEST(Serialize, round15) {
    EXPECT_EQ(round15(0.1 + 0.2), 0.3);
    EXPECT_EQ(round15(0.0), 0.0);
}

TEST(Parallel, every_index_once) {
    setenv("MUBKIT_THREADS", "4", 1);
    EXPECT_EQ(max_threads(), 4u);
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](size_t i) { hits[i]++; });
    for (auto &h : hits) EXPECT_EQ(h.load(), 1);
    EXPECT_THROW(parallel_for(10, [](size_t i) {
                     if (i == 7) throw std::runtime_error("boom");
                 }),
                 std::runtime_error);
    unsetenv("MUBKIT_THREADS");
}

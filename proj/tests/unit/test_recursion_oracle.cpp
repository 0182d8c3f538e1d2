// SPDX-License-Identifier: Apache-2.0
//
// mhdmt - diversity-multiplexing tradeoff toolkit for MIMO multihop relay channels
// Copyright (C) 2026 The mhdmt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "mhdmt/recursion_oracle.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace mhdmt;

TEST_CASE("recursion values") {
    CHECK(dmt_recursive({2, 2, 2, 2}, 0) == 3);
    CHECK(dmt_recursive({2, 4, 3}, 0) == 6);
    CHECK(dmt_recursive({2, 4, 3}, 1) == 2);
    CHECK(dmt_recursive({3, 1, 4, 2}, 0) == 2);
    test::for_each_dimension(4, 3, [](const Dimension& dim) { CHECK(dmt_recursive(dim, dim.n_min()) == 0); });
    CHECK_THROWS_AS(dmt_recursive({2, 2, 2}, 3), std::out_of_range);
    CHECK_THROWS_AS(dmt_recursive({2, 2, 2}, -1), std::out_of_range);
}

TEST_CASE("split and shift evaluations") {
    RecursionOracle o;
    CHECK(o.diversity_split({3, 2, 2, 2, 3}, 2, 0) == dmt_rp_at({3, 2, 2, 2, 3}, 0));
    CHECK(o.diversity_shifted({5, 5, 5}, 1) == o.diversity({4, 4, 4}, 0));
    CHECK_FALSE(o.diversity_shifted({2, 3}, 2));
    CHECK_THROWS_AS(o.diversity_split({2, 2}, 1, 0), std::out_of_range);
    CHECK(o.memo_size() > 0);
}

TEST_CASE("cross check against the closed form") {
    CHECK(cross_check({2, 2, 2}));
    for (int nt = 1; nt <= 6; ++nt) {
        for (int nr = 1; nr <= 6; ++nr) CHECK(cross_check({nt, nr}));
    }
    RecursionOracle o;
    std::size_t cases = 0;
    test::for_each_dimension(5, 4, [&](const Dimension& dim) {
        INFO(dim.str());
        CHECK(cross_check(dim, o));
        ++cases;
    });
    CHECK(cases == 25 + 125 + 625 + 3125);
}

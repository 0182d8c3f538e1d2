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

#include "mhdmt/dmt.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

using namespace mhdmt;

namespace {

std::vector<std::int64_t> integer_points(const DmtCurve& c) {
    std::vector<std::int64_t> out;
    for (std::int64_t k = 0; k <= c.max_multiplexing().numerator(); ++k) {
        const Rational d = c.at(k);
        REQUIRE(d.denominator() == 1);
        out.push_back(d.numerator());
    }
    return out;
}

using Pts = std::vector<std::int64_t>;

// Serial diversity of a decode set, evaluated segment by segment.
std::int64_t serial_d0(const Dimension& dim, const std::vector<int>& decode) {
    std::int64_t best = max_diversity(dim);
    int prev = 0;
    for (int d : decode) {
        best = std::min(best, dmt_rp_at(dim.segment(static_cast<std::size_t>(prev), static_cast<std::size_t>(d)), 0));
        prev = d;
    }
    return best;
}

}  // namespace

TEST_CASE("dimension parsing and views") {
    const Dimension d = Dimension::parse("2,4,3");
    CHECK(d.hops() == 2);
    CHECK(d.layers() == 3);
    CHECK(d.ordered() == std::vector<int>{2, 3, 4});
    CHECK(d.n_min() == 2);
    CHECK(d.n_max() == 4);
    CHECK(d.str() == "(2,4,3)");
    CHECK(Dimension::parse(" 1 , 5 ") == Dimension{1, 5});
    CHECK_THROWS_AS(Dimension::parse("2,,3"), std::invalid_argument);
    CHECK_THROWS_AS(Dimension::parse("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(Dimension::parse("4"), std::invalid_argument);
    CHECK_THROWS_AS(Dimension::parse("2,0,2"), std::invalid_argument);
    CHECK_THROWS_AS(Dimension::parse(""), std::invalid_argument);
}

TEST_CASE("coefficients") {
    CHECK(coeffs({2, 2, 2}) == DmtCoeffs{2, 1});
    CHECK(coeffs({2, 4, 3}) == DmtCoeffs{4, 2});
    for (int m = 1; m <= 8; ++m) CHECK(coeffs({1, m}) == DmtCoeffs{m});
    for (int m = 1; m <= 8; ++m) CHECK(coeffs({m, 1}) == DmtCoeffs{m});
}

TEST_CASE("coefficients are non-negative and non-increasing") {
    test::for_each_dimension(5, 4, [](const Dimension& dim) {
        const auto c = coeffs(dim);
        REQUIRE(c.size() == static_cast<std::size_t>(dim.n_min()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            CHECK(c[i] >= 0);
            if (i > 0) CHECK(c[i] <= c[i - 1]);
        }
    });
}

TEST_CASE("rayleigh product curves") {
    CHECK(integer_points(dmt_rp({2, 2, 2})) == Pts{3, 1, 0});
    CHECK(integer_points(dmt_rp({2, 4, 3})) == Pts{6, 2, 0});
    CHECK(integer_points(dmt_rp({2, 2, 2, 2})) == Pts{3, 1, 0});
    CHECK(integer_points(dmt_rp({1, 1})) == Pts{1, 0});
    // values frozen from tests/oracles/dmt_oracle.py
    CHECK(integer_points(dmt_rp({3, 1, 4, 2})) == Pts{2, 0});
    CHECK(integer_points(dmt_rp({5, 5, 5, 5, 5, 5})) == Pts{15, 10, 6, 3, 1, 0});
    CHECK(integer_points(dmt_rp({3, 2, 2, 3})) == Pts{4, 1, 0});
    for (int nt = 1; nt <= 6; ++nt) {
        for (int nr = 1; nr <= 6; ++nr) CHECK(dmt_rp({nt, nr}) == dmt_rayleigh(nt, nr));
    }
}

TEST_CASE("rayleigh tradeoff") {
    CHECK(integer_points(dmt_rayleigh(2, 2)) == Pts{4, 1, 0});
    CHECK(integer_points(dmt_rayleigh(1, 1)) == Pts{1, 0});
    CHECK(integer_points(dmt_rayleigh(2, 4)) == Pts{8, 3, 0});
    CHECK_THROWS_AS(dmt_rayleigh(0, 2), std::invalid_argument);
}

TEST_CASE("curve evaluation") {
    const DmtCurve c = dmt_rp({2, 2, 2});
    CHECK(c.at(Rational(1, 2)) == Rational(2));
    CHECK(c.at(Rational(-1)) == Rational(3));
    CHECK(c.at(Rational(7)) == Rational(0));
    CHECK(c.at(0.5) == Catch::Approx(2.0));
    CHECK(c.at(1.5) == Catch::Approx(0.5));
    std::ostringstream os;
    os << c;
    CHECK(os.str() == "(0,3) (1,1) (2,0)");
    CHECK_THROWS_AS(DmtCurve({{Rational(0), Rational(1)}, {Rational(1), Rational(2)}, {Rational(2), Rational(0)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DmtCurve({{Rational(0), Rational(1)}}), std::invalid_argument);
}

TEST_CASE("cut-set bound") {
    const Dimension a{2, 2, 2};
    CHECK(max_diversity(a) == 4);
    CHECK(max_multiplexing(a) == 2);
    CHECK(cutset_bound(a) == dmt_rayleigh(2, 2));

    const Dimension b{2, 4, 3};
    CHECK(max_diversity(b) == 8);
    CHECK(max_multiplexing(b) == 2);
    CHECK(integer_points(cutset_bound(b)) == Pts{8, 3, 0});

    CHECK(max_diversity({1, 1, 1, 1}) == 1);
    CHECK(max_multiplexing({1, 1, 1, 1}) == 1);
}

TEST_CASE("cut-set bound keeps rational crossings") {
    const DmtCurve steep({{Rational(0), Rational(6)}, {Rational(1), Rational(0)}});
    const DmtCurve flat({{Rational(0), Rational(4)}, {Rational(2), Rational(0)}});
    const DmtCurve m = pointwise_min(steep, flat);
    // 6 - 6r = 4 - 2r at r = 1/2
    CHECK(m.at(Rational(1, 2)) == Rational(3));
    CHECK(m.at(Rational(1, 4)) == Rational(7, 2));
    CHECK(m.at(Rational(3, 4)) == Rational(3, 2));
    const auto& v = m.vertices();
    CHECK(std::any_of(v.begin(), v.end(), [](const Vertex& x) { return x.r == Rational(1, 2); }));
}

TEST_CASE("symmetric closed form") {
    CHECK(symmetric_diversity(2, 2, 0) == 3);
    CHECK(symmetric_diversity(2, 3, 0) == 3);
    for (int hops = 5; hops <= 8; ++hops) CHECK(symmetric_diversity(5, hops, 0) == 15);
    for (int n = 1; n <= 8; ++n) {
        for (int hops = 1; hops <= 8; ++hops) {
            CHECK(dmt_symmetric(n, hops) == dmt_rp(Dimension(std::vector<int>(static_cast<std::size_t>(hops) + 1, n))));
        }
    }
    CHECK_THROWS_AS(symmetric_diversity(2, 2, 3), std::out_of_range);
}

TEST_CASE("permutation invariance") {
    test::for_each_dimension(4, 3, [](const Dimension& dim) {
        std::vector<int> n(dim.counts().begin(), dim.counts().end());
        const DmtCurve ref = dmt_rp(dim);
        std::sort(n.begin(), n.end());
        do {
            CHECK(dmt_rp(Dimension(n)) == ref);
        } while (std::next_permutation(n.begin(), n.end()));
    });
}

TEST_CASE("sandwich bounds on d(0)") {
    test::for_each_dimension(5, 4, [](const Dimension& dim) {
        const auto n = dim.ordered();
        const std::int64_t d0 = dmt_rp_at(dim, 0);
        CHECK(2 * d0 >= std::int64_t{n[0]} * (n[1] + 1));
        CHECK(d0 <= std::int64_t{n[0]} * n[1]);
        CHECK(d0 <= max_diversity(dim));
    });
}

TEST_CASE("AF reaches the cut-set diversity exactly under the adjacency condition") {
    test::for_each_dimension(5, 4, [](const Dimension& dim) {
        INFO(dim.str());
        CHECK((dmt_rp_at(dim, 0) == max_diversity(dim)) == af_is_diversity_optimal(dim));
    });
}

TEST_CASE("more antennas per layer never hurt, more layers never help") {
    test::for_each_dimension(4, 3, [](const Dimension& dim) {
        const DmtCurve base = dmt_rp(dim);
        std::vector<int> n(dim.counts().begin(), dim.counts().end());
        for (std::size_t i = 0; i < n.size(); ++i) {
            auto bigger = n;
            ++bigger[i];
            const DmtCurve up = dmt_rp(Dimension(bigger));
            for (int k = 0; k <= dim.n_min(); ++k) CHECK(up.at(std::int64_t{k}) >= base.at(std::int64_t{k}));
        }
        for (std::size_t pos = 0; pos <= n.size(); ++pos) {
            for (int extra = 1; extra <= 4; ++extra) {
                auto longer = n;
                longer.insert(longer.begin() + static_cast<std::ptrdiff_t>(pos), extra);
                const DmtCurve down = dmt_rp(Dimension(longer));
                for (int k = 0; k <= dim.n_min(); ++k) CHECK(down.at(std::int64_t{k}) <= base.at(std::int64_t{k}));
            }
        }
    });
}

TEST_CASE("serial partitions") {
    const Dimension d{3, 1, 4, 2};
    CHECK(dmt_serial_partition(d, DecodeSet({1, 2, 3}, 3)).max_diversity() == Rational(3));
    CHECK(dmt_serial_partition(d, DecodeSet({3}, 3)).max_diversity() == Rational(2));
    CHECK(dmt_serial_partition(d, DecodeSet({2, 3}, 3)).max_diversity() == Rational(3));
    test::for_each_dimension(4, 3, [](const Dimension& dim) {
        CHECK(dmt_serial_partition(dim, DecodeSet({dim.hops()}, dim.hops())) == dmt_rp(dim));
        std::vector<int> all(static_cast<std::size_t>(dim.hops()));
        std::iota(all.begin(), all.end(), 1);
        CHECK(dmt_serial_partition(dim, DecodeSet(all, dim.hops())) == cutset_bound(dim));
    });
    CHECK_THROWS_AS(DecodeSet({1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(DecodeSet({2, 2, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(DecodeSet({0, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(dmt_serial_partition(d, DecodeSet({2}, 2)), std::invalid_argument);
}

TEST_CASE("where to decode") {
    CHECK(where_to_decode({3, 1, 4, 2}, 3).indices() == std::vector<int>{2, 3});
    CHECK(where_to_decode({2, 2, 2}, 3).indices() == std::vector<int>{2});
    CHECK(where_to_decode({2, 2, 2}, 4).indices() == std::vector<int>{1, 2});
    CHECK_THROWS_WITH(where_to_decode({2, 2, 2}, 5), "unachievable diversity");
}

TEST_CASE("where to decode is minimal against exhaustive search") {
    test::for_each_dimension(4, 4, [](const Dimension& dim) {
        const int hops = dim.hops();
        for (std::int64_t target = 1; target <= max_diversity(dim); ++target) {
            INFO(dim.str() << " target " << target);
            std::size_t best = static_cast<std::size_t>(hops) + 1;
            for (unsigned mask = 0; mask < (1U << (hops - 1)); ++mask) {
                std::vector<int> decode;
                for (int l = 1; l < hops; ++l) {
                    if (mask >> (l - 1) & 1U) decode.push_back(l);
                }
                decode.push_back(hops);
                if (serial_d0(dim, decode) >= target) best = std::min(best, decode.size());
            }
            const DecodeSet got = where_to_decode(dim, target);
            CHECK(got.size() == best);
            CHECK(serial_d0(dim, got.indices()) >= target);
        }
        CHECK(where_to_decode(dim, 1).indices() == std::vector<int>{hops});
    });
}

TEST_CASE("flip-and-forward lower bound") {
    const DmtCurve ff = dmt_ff_lower_bound({2, 2, 2}, 2);
    CHECK(ff.at(std::int64_t{0}) == Rational(4));
    CHECK(ff.at(Rational(1, 2)) == Rational(2));
    CHECK(ff.at(std::int64_t{2}) == Rational(0));
    CHECK(dmt_ff_lower_bound({2, 2, 2, 2}, 4).max_diversity() == Rational(4));
    CHECK_THROWS_AS(dmt_ff_lower_bound({2, 2, 2}, 0), std::invalid_argument);

    test::for_each_dimension(4, 3, [](const Dimension& dim) {
        const DmtCurve af = dmt_rp(dim);
        for (int modes = 1; modes <= 4; ++modes) {
            const DmtCurve ff = dmt_ff_lower_bound(dim, modes);
            CHECK(ff.max_diversity() == Rational(max_diversity(dim)));
            for (int t = 0; t <= 8 * dim.n_min(); ++t) {
                const Rational r(t, 8);
                CHECK(ff.at(r) >= af.at(r));
                if (r >= Rational(1, modes)) CHECK(ff.at(r) == af.at(r));
            }
        }
    });
}

TEST_CASE("parallel AF") {
    // d_max single-antenna paths give d_max (1 - r)^+
    const Dimension dim{2, 2, 2};
    const ParallelDmt single = dmt_parallel_af(dim, std::vector<Dimension>(4, Dimension{1, 1, 1}));
    CHECK(single.diversity == 4);
    REQUIRE(single.curve);
    CHECK(*single.curve == DmtCurve({{Rational(0), Rational(4)}, {Rational(1), Rational(0)}}));

    const ParallelDmt two = dmt_parallel_af({2, 4, 3}, {Dimension{2, 2, 3}, Dimension{2, 2, 3}});
    CHECK(two.diversity == 8);

    const ParallelDmt trivial = dmt_parallel_af(dim, {dim});
    REQUIRE(trivial.curve);
    CHECK(*trivial.curve == dmt_rp(dim));

    const ParallelDmt mixed = dmt_parallel_af({2, 4, 3}, {Dimension{2, 3, 3}, Dimension{2, 1, 3}});
    CHECK(mixed.diversity == dmt_rp_at({2, 3, 3}, 0) + dmt_rp_at({2, 1, 3}, 0));
    CHECK_FALSE(mixed.curve);

    CHECK_THROWS_AS(dmt_parallel_af(dim, {}), std::invalid_argument);
    CHECK_THROWS_AS(dmt_parallel_af(dim, {Dimension{1, 3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(dmt_parallel_af(dim, {Dimension{1, 1}}), std::invalid_argument);
}

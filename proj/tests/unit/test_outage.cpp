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

#include "mhdmt/outage.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

using namespace mhdmt;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<double> grid(double start, double step, double stop) {
    std::vector<double> out;
    for (double s = start; s <= stop + 1e-9; s += step) out.push_back(s);
    return out;
}

std::vector<std::uint64_t> counts(const std::vector<OutageEstimate>& v) {
    std::vector<std::uint64_t> out;
    for (const auto& e : v) out.push_back(e.outage_count);
    return out;
}

}  // namespace

TEST_CASE("scheme names round-trip") {
    for (Scheme s : {Scheme::af, Scheme::pf, Scheme::df, Scheme::parallel_af, Scheme::ff, Scheme::svd_align}) {
        CHECK(parse_scheme(to_string(s)) == s);
    }
    CHECK_THROWS_AS(parse_scheme("xf"), std::invalid_argument);
    CHECK_THROWS_AS(SchemeConfig::plain(Scheme::ff), std::invalid_argument);
}

TEST_CASE("interval bookkeeping") {
    const auto e = make_estimate(10.0, 2.0, 1000, 30);
    CHECK(e.p_hat == 0.03);
    CHECK(e.ci_lo < 0.03);
    CHECK(e.ci_hi > 0.03);
    const auto zero = make_estimate(10.0, 2.0, 1000, 0);
    CHECK(zero.ci_lo == 0.0);
    CHECK(zero.ci_hi == 0.0005);
    CHECK(make_estimate(0.0, 2.0, 10, 10).ci_hi == 1.0);
    CHECK_THROWS_AS(make_estimate(0.0, 1.0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_estimate(0.0, 1.0, 5, 6), std::invalid_argument);
}

TEST_CASE("rate zero is never in outage") {
    const Dimension dim{2, 2, 2};
    const auto e = estimate_outage(dim, SchemeConfig::plain(Scheme::af), 0.0, 0.0, 2000, 1);
    CHECK(e.outage_count == 0);
    CHECK(e.p_hat == 0.0);
}

TEST_CASE("counts do not depend on the worker count") {
    const Dimension dim{2, 2, 2};
    const auto cfg = SchemeConfig::ff(dim, min_full_div_partition_2hop(2, 2, 2).second);
    const auto g = grid(0.0, 5.0, 20.0);
    const auto one = counts(estimate_outage_grid(dim, cfg, RatePolicy{2.0, false}, g, 3001, 42, 1));
    CHECK(one == counts(estimate_outage_grid(dim, cfg, RatePolicy{2.0, false}, g, 3001, 42, 1)));
    CHECK(one == counts(estimate_outage_grid(dim, cfg, RatePolicy{2.0, false}, g, 3001, 42, 2)));
    CHECK(one == counts(estimate_outage_grid(dim, cfg, RatePolicy{2.0, false}, g, 3001, 42, 7)));
    CHECK(one != counts(estimate_outage_grid(dim, cfg, RatePolicy{2.0, false}, g, 3001, 43, 1)));
}

TEST_CASE("outage falls with SNR") {
    const Dimension dim{2, 2, 2};
    const auto v = estimate_outage_grid(dim, SchemeConfig::plain(Scheme::af), RatePolicy{2.0, false}, grid(0, 2.5, 25), 20000, 3);
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i].outage_count <= v[i - 1].outage_count);
    CHECK(v.front().p_hat > 0.9);
}

TEST_CASE("scaled rate grows with SNR") {
    const RatePolicy r{0.5, true};
    CHECK_THAT(r.at(30.0), WithinAbs(0.5 * std::log2(1000.0), 1e-12));
    CHECK(RatePolicy{2.0, false}.at(30.0) == 2.0);
}

TEST_CASE("destination-only decoding is AF") {
    const Dimension dim{3, 1, 4, 2};
    const auto g = grid(5, 5, 20);
    const auto af = estimate_outage_grid(dim, SchemeConfig::plain(Scheme::af), RatePolicy{2.0, false}, g, 4000, 8);
    const auto df = estimate_outage_grid(dim, SchemeConfig::df(DecodeSet({3}, 3)), RatePolicy{2.0, false}, g, 4000, 8);
    CHECK(counts(af) == counts(df));
}

TEST_CASE("exact power law has its exponent as slope") {
    std::vector<OutageEstimate> pts;
    for (double db = 10; db <= 30; db += 5) {
        OutageEstimate e;
        e.snr_db = db;
        e.trials = 100000000;
        e.outage_count = 1000;
        e.p_hat = std::pow(10.0, -3.0 * db / 10.0);
        pts.push_back(e);
    }
    CHECK_THAT(estimate_slope(pts), WithinAbs(3.0, 1e-9));
    pts.resize(2);
    CHECK_THROWS_AS(estimate_slope(pts), NumericalError);
}

TEST_CASE("slope fit skips points with too few events") {
    std::vector<OutageEstimate> pts{make_estimate(0, 1, 1000, 500), make_estimate(10, 1, 1000, 100),
                                    make_estimate(20, 1, 1000, 10), make_estimate(30, 1, 1000, 0)};
    CHECK_THROWS_AS(estimate_slope(pts), NumericalError);
    CHECK(in_band(pts, 1e-2, 0.2).size() == 1);
}

TEST_CASE("csv layout") {
    std::ostringstream os;
    write_csv(os, {make_estimate(12.5, 2.0, 1000, 25)});
    CHECK(os.str() ==
          "snr_db,rate,trials,outages,p_hat,ci_lo,ci_hi\n"
          "12.5,2,1000,25,2.500000000e-02,1.482345316e-02,3.517654684e-02\n");
}

TEST_CASE("splitting the relay layer beats AF on (2,4,3) at high SNR") {
    const Dimension dim{2, 4, 3};
    const auto cfg = SchemeConfig::parallel_af(dim, min_full_div_partition_2hop(2, 4, 3).second);
    const auto par = estimate_outage(dim, cfg, 2.0, 11.0, 100000, 5);
    const auto af = estimate_outage(dim, SchemeConfig::plain(Scheme::af), 2.0, 11.0, 100000, 5);
    CHECK(par.ci_hi < af.ci_lo);
}

TEST_CASE("singular-vector alignment decays faster than AF on (2,2,2)") {
    const Dimension dim{2, 2, 2};
    const auto g = grid(5, 1, 16);
    const auto svd = estimate_outage_grid(dim, SchemeConfig::plain(Scheme::svd_align), RatePolicy{2.0, false}, g, 100000, 6);
    const auto af = estimate_outage_grid(dim, SchemeConfig::plain(Scheme::af), RatePolicy{2.0, false}, g, 100000, 6);
    CHECK(estimate_slope(in_band(svd, 1e-4, 1e-1)) > estimate_slope(in_band(af, 1e-4, 1e-1)));
}

TEST_CASE("outage and the small-gain event share a slope") {
    // P(snr/n0 |L^{-1} G|^2 < 1) against outage at a small fixed rate.
    const Dimension dim{1, 1, 1};
    const auto g = grid(5, 5, 35);
    const std::uint64_t trials = 200000;
    std::vector<std::uint64_t> small(g.size(), 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Stream rng(21, t);
        const auto real = sample_channel(dim, rng);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double snr = db_to_linear(g[i]);
            const auto eff = af_effective(real, snr);
            const Eigen::LLT<CMatrix> l(eff.noise_cov);
            if (snr * l.matrixL().solve(eff.gain).squaredNorm() < 1.0) ++small[i];
        }
    }
    std::vector<OutageEstimate> event;
    for (std::size_t i = 0; i < g.size(); ++i) event.push_back(make_estimate(g[i], 0.0, trials, small[i]));
    const auto out = estimate_outage_grid(dim, SchemeConfig::plain(Scheme::af), RatePolicy{0.5, false}, g, trials, 21);
    const double a = estimate_slope(in_band(event, 1e-4, 1e-1));
    const double b = estimate_slope(in_band(out, 1e-4, 1e-1));
    CHECK(std::abs(a - b) < 0.5);
}

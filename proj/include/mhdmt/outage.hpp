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

/**
 * @file outage.hpp
 * @brief Monte-Carlo outage estimation and finite-SNR diversity slopes.
 *
 * Trial t always draws its channel from Stream(seed, t), and workers only
 * add integer counts, so results do not depend on the worker count. One
 * channel draw serves every SNR point of a grid.
 */

#pragma once

#include "mhdmt/channel.hpp"
#include "mhdmt/errors.hpp"
#include "mhdmt/partition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace mhdmt {

enum class Scheme { af, pf, df, parallel_af, ff, svd_align };

inline std::string_view to_string(Scheme s) {
    switch (s) {
        case Scheme::af: return "af";
        case Scheme::pf: return "pf";
        case Scheme::df: return "df";
        case Scheme::parallel_af: return "parallel-af";
        case Scheme::ff: return "ff";
        case Scheme::svd_align: return "svd-align";
    }
    return "?";
}

inline Scheme parse_scheme(std::string_view name) {
    for (Scheme s : {Scheme::af, Scheme::pf, Scheme::df, Scheme::parallel_af, Scheme::ff, Scheme::svd_align}) {
        if (to_string(s) == name) return s;
    }
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

/// Scheme plus whatever it needs: a decode set (df), a partition (parallel-af, ff).
struct SchemeConfig {
    Scheme scheme = Scheme::af;
    DecodeSet decode;
    Partition partition;
    FlipSchedule schedule;

    static SchemeConfig plain(Scheme s) {
        if (s == Scheme::df || s == Scheme::parallel_af || s == Scheme::ff) {
            throw std::invalid_argument("scheme needs a decode set or partition");
        }
        SchemeConfig c;
        c.scheme = s;
        return c;
    }
    static SchemeConfig df(DecodeSet d) {
        SchemeConfig c;
        c.scheme = Scheme::df;
        c.decode = std::move(d);
        return c;
    }
    static SchemeConfig parallel_af(const Dimension& dim, Partition p) {
        validate(dim, p);
        SchemeConfig c;
        c.scheme = Scheme::parallel_af;
        c.partition = std::move(p);
        return c;
    }
    static SchemeConfig ff(const Dimension& dim, Partition p) {
        SchemeConfig c;
        c.scheme = Scheme::ff;
        c.schedule = ff_schedule(dim, p);
        c.partition = std::move(p);
        return c;
    }
    static SchemeConfig ff(FlipSchedule s) {
        SchemeConfig c;
        c.scheme = Scheme::ff;
        c.schedule = std::move(s);
        return c;
    }
};

/// Rate in bits per channel use; each point sees the average over sub-channels or modes.
inline double scheme_mutual_info(const Dimension& dim, const SchemeConfig& cfg, const ChannelRealization& real, double snr) {
    switch (cfg.scheme) {
        case Scheme::af: return mutual_info(af_effective(real, snr), snr, dim[0]);
        case Scheme::pf: return mutual_info(pf_effective(real, snr), snr, dim[0]);
        case Scheme::svd_align: return mutual_info(svd_align_effective(real, snr), snr, dim[0]);
        case Scheme::df: return df_mutual_info(real, cfg.decode, snr);
        case Scheme::ff: {
            const auto modes = ff_effective(real, cfg.schedule, snr);
            double sum = 0.0;
            for (const auto& m : modes) sum += mutual_info(m, snr, dim[0]);
            return sum / static_cast<double>(modes.size());
        }
        case Scheme::parallel_af: {
            const auto paths = parallel_af_effective(real, cfg.partition, snr);
            double sum = 0.0;
            for (std::size_t k = 0; k < paths.size(); ++k) {
                sum += mutual_info(paths[k], snr, static_cast<int>(cfg.partition.paths[k].supernodes.front().antennas.size()));
            }
            return sum / static_cast<double>(paths.size());
        }
    }
    throw std::logic_error("unhandled scheme");
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Fixed rate, or r log2(snr) when `scaled` (multiplexing gain r).
struct RatePolicy {
    double value = 0.0;
    bool scaled = false;
    [[nodiscard]] double at(double snr_db) const { return scaled ? value * std::log2(db_to_linear(snr_db)) : value; }
};

struct OutageEstimate {
    double snr_db = 0.0;
    double rate_bpcu = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t outage_count = 0;
    double p_hat = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};

/// Normal-approximation 95% interval widened by the 1/(2n) continuity term, clipped to [0, 1].
inline OutageEstimate make_estimate(double snr_db, double rate, std::uint64_t trials, std::uint64_t outages) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    if (outages > trials) throw std::invalid_argument("more outages than trials");
    OutageEstimate e{snr_db, rate, trials, outages, 0.0, 0.0, 0.0};
    const auto n = static_cast<double>(trials);
    e.p_hat = static_cast<double>(outages) / n;
    const double half = 1.959963984540054 * std::sqrt(e.p_hat * (1.0 - e.p_hat) / n) + 0.5 / n;
    e.ci_lo = std::max(0.0, e.p_hat - half);
    e.ci_hi = std::min(1.0, e.p_hat + half);
    return e;
}

/**
 * Splits [0, trials) into `workers` contiguous blocks and sums the per-block
 * integer counts returned by `block(begin, end)`. Counts have fixed length.
 */
inline std::vector<std::uint64_t> run_trials(std::uint64_t trials, unsigned workers,
                                             const std::function<std::vector<std::uint64_t>(std::uint64_t, std::uint64_t)>& block) {
    workers = std::max(1U, workers);
    if (workers == 1 || trials < workers) return block(0, trials);
    std::vector<std::vector<std::uint64_t>> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = trials * w / workers;
        const std::uint64_t end = trials * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            try {
                parts[w] = block(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<std::uint64_t> total(parts.front().size(), 0);
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += p[i];
    }
    return total;
}

inline std::vector<OutageEstimate> estimate_outage_grid(const Dimension& dim, const SchemeConfig& cfg, const RatePolicy& rate,
                                                        const std::vector<double>& snr_db, std::uint64_t trials,
                                                        std::uint64_t seed, unsigned workers = 1) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    if (snr_db.empty()) throw std::invalid_argument("empty SNR grid");
    std::vector<double> snr(snr_db.size());
    std::vector<double> rates(snr_db.size());
    for (std::size_t i = 0; i < snr_db.size(); ++i) {
        snr[i] = db_to_linear(snr_db[i]);
        rates[i] = rate.at(snr_db[i]);
    }
    const auto counts = run_trials(trials, workers, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> c(snr.size(), 0);
        for (std::uint64_t t = begin; t < end; ++t) {
            Stream rng(seed, t);
            const ChannelRealization real = sample_channel(dim, rng);
            for (std::size_t i = 0; i < snr.size(); ++i) {
                if (scheme_mutual_info(dim, cfg, real, snr[i]) < rates[i]) ++c[i];
            }
        }
        return c;
    });
    std::vector<OutageEstimate> out;
    for (std::size_t i = 0; i < snr_db.size(); ++i) out.push_back(make_estimate(snr_db[i], rates[i], trials, counts[i]));
    return out;
}

inline OutageEstimate estimate_outage(const Dimension& dim, const SchemeConfig& cfg, double rate, double snr_db,
                                      std::uint64_t trials, std::uint64_t seed, unsigned workers = 1) {
    return estimate_outage_grid(dim, cfg, RatePolicy{rate, false}, {snr_db}, trials, seed, workers).front();
}

/// Points with lo <= p_hat <= hi and at least `min_events` outages.
inline std::vector<OutageEstimate> in_band(const std::vector<OutageEstimate>& points, double lo, double hi,
                                           std::uint64_t min_events = 20) {
    std::vector<OutageEstimate> out;
    for (const auto& p : points) {
        if (p.p_hat >= lo && p.p_hat <= hi && p.outage_count >= min_events) out.push_back(p);
    }
    return out;
}

/**
 * Negative slope of the weighted least-squares line through
 * (snr_db / 10, log10 p_hat). The weight of a point is the inverse of the
 * delta-method variance (1 - p) / (n p ln(10)^2) of log10 p_hat. Points with
 * p_hat outside (0, 1) or fewer than `min_events` outages are skipped.
 */
inline double estimate_slope(const std::vector<OutageEstimate>& points, std::uint64_t min_events = 20) {
    double sw = 0.0;
    double sx = 0.0;
    double sy = 0.0;
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> ws;
    const double ln10sq = std::log(10.0) * std::log(10.0);
    for (const auto& p : points) {
        if (!(p.p_hat > 0.0 && p.p_hat < 1.0) || p.outage_count < min_events) continue;
        const double var = (1.0 - p.p_hat) / (static_cast<double>(p.trials) * p.p_hat * ln10sq);
        xs.push_back(p.snr_db / 10.0);
        ys.push_back(std::log10(p.p_hat));
        ws.push_back(1.0 / var);
        sw += ws.back();
        sx += ws.back() * xs.back();
        sy += ws.back() * ys.back();
    }
    if (xs.size() < 3) throw NumericalError("insufficient valid points for a slope fit");
    const double mx = sx / sw;
    const double my = sy / sw;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += ws[i] * (xs[i] - mx) * (ys[i] - my);
        sxx += ws[i] * (xs[i] - mx) * (xs[i] - mx);
    }
    if (!(sxx > 0.0)) throw NumericalError("slope fit needs distinct SNR points");
    return -sxy / sxx;
}

inline std::string format_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

inline void write_csv(std::ostream& os, const std::vector<OutageEstimate>& points) {
    os << "snr_db,rate,trials,outages,p_hat,ci_lo,ci_hi\n";
    for (const auto& p : points) {
        os << format_double("%.6g", p.snr_db) << ',' << format_double("%.6g", p.rate_bpcu) << ',' << p.trials << ','
           << p.outage_count << ',' << format_double("%.9e", p.p_hat) << ',' << format_double("%.9e", p.ci_lo) << ','
           << format_double("%.9e", p.ci_hi) << '\n';
    }
}

}  // namespace mhdmt

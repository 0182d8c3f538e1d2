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

// mhdmt command-line front end: dmt, reduce, partition, simulate.
// Exit codes: 0 success, 2 usage error, 3 numerical failure.

#include "mhdmt/dmt.hpp"
#include "mhdmt/outage.hpp"
#include "mhdmt/partition.hpp"
#include "mhdmt/partition_json.hpp"
#include "mhdmt/partition_search.hpp"
#include "mhdmt/reduction.hpp"
#include "mhdmt/stbc.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace mhdmt;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SnrGrid {
    double start = 0;
    double step = 0;
    double stop = 0;
    std::vector<double> points;
};

SnrGrid parse_grid(const std::string& text) {
    SnrGrid g;
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(field, &used));
            if (used != field.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw UsageError("malformed SNR grid '" + text + "'");
        }
    }
    if (parts.size() == 1) parts = {parts[0], 1.0, parts[0]};
    if (parts.size() != 3) throw UsageError("SNR grid must be start:step:stop");
    g.start = parts[0];
    g.step = parts[1];
    g.stop = parts[2];
    if (!(g.step > 0) || g.stop < g.start) throw UsageError("SNR grid must be strictly increasing");
    for (int i = 0;; ++i) {
        const double v = g.start + i * g.step;
        if (v > g.stop + 1e-9 * std::max(1.0, std::abs(g.stop))) break;
        g.points.push_back(v);
    }
    return g;
}

std::uint64_t parse_trials(const std::string& text) {
    double v = 0;
    try {
        std::size_t used = 0;
        v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw UsageError("malformed trial count '" + text + "'");
    }
    if (!(v >= 1) || v != std::floor(v) || v > 1e15) throw UsageError("trials must be a positive integer");
    return static_cast<std::uint64_t>(v);
}

std::vector<int> parse_ints(const std::string& text) {
    try {
        const auto d = Dimension::parse(text + ",1");
        std::vector<int> out(d.counts().begin(), d.counts().end() - 1);
        return out;
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed integer list '" + text + "'");
    }
}

Dimension parse_dimension(const std::string& text) {
    try {
        return Dimension::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string sha1_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha1(), nullptr) != 1) {
        throw std::runtime_error("SHA-1 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) throw UsageError("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

json curve_json(const DmtCurve& c) {
    json out = json::array();
    for (const auto& v : c.vertices()) out.push_back({to_string(v.r), to_string(v.d)});
    return out;
}

std::optional<Partition> load_partition(const std::string& path, const Dimension& dim) {
    if (path.empty()) return std::nullopt;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read partition file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed partition JSON: ") + e.what());
    }
    auto [pdim, p] = partition_from_json(j);
    if (!(pdim == dim)) throw UsageError("partition dimension " + pdim.str() + " does not match " + dim.str());
    return p;
}

/// Explicit partition, or the minimum full-diversity 2-hop partition when N = 2.
Partition partition_or_default(const std::optional<Partition>& given, const Dimension& dim, const std::string& scheme) {
    if (given) return *given;
    if (dim.hops() != 2) throw UsageError("scheme " + scheme + " needs --partition when the channel is not 2-hop");
    return min_full_div_partition_2hop(dim[0], dim[1], dim[2]).second;
}

// ---- dmt ------------------------------------------------------------------

struct DmtArgs {
    std::string dim;
    std::vector<std::string> curves{"rp"};
    std::string decode;
    int modes = 0;
    std::string partition;
    std::string out;
    std::string format = "csv";
};

int run_dmt(const DmtArgs& a) {
    const Dimension dim = parse_dimension(a.dim);
    std::vector<std::pair<std::string, DmtCurve>> rows;
    std::vector<std::pair<std::string, std::int64_t>> diversity_only;
    for (const auto& name : a.curves) {
        if (name == "rp") {
            rows.emplace_back(name, dmt_rp(dim));
        } else if (name == "cutset") {
            rows.emplace_back(name, cutset_bound(dim));
        } else if (name == "df") {
            std::vector<int> all;
            for (int i = 1; i <= dim.hops(); ++i) all.push_back(i);
            rows.emplace_back(name, dmt_serial_partition(dim, DecodeSet(all, dim.hops())));
        } else if (name == "serial") {
            if (a.decode.empty()) throw UsageError("curve serial needs --decode");
            rows.emplace_back(name, dmt_serial_partition(dim, DecodeSet(parse_ints(a.decode), dim.hops())));
        } else if (name == "ff-bound") {
            int modes = a.modes;
            if (modes == 0) {
                if (dim.hops() != 2) throw UsageError("curve ff-bound needs --modes when the channel is not 2-hop");
                modes = static_cast<int>(ff_schedule(dim, partition_or_default(std::nullopt, dim, "ff")).modes);
            }
            rows.emplace_back(name, dmt_ff_lower_bound(dim, modes));
        } else if (name == "parallel-af") {
            const Partition p = partition_or_default(load_partition(a.partition, dim), dim, "parallel-af");
            std::vector<Dimension> paths;
            for (const auto& path : p.paths) paths.push_back(path.dimension());
            const auto par = dmt_parallel_af(dim, paths);
            if (par.curve) {
                rows.emplace_back(name, *par.curve);
            } else {
                diversity_only.emplace_back(name, par.diversity);
            }
        } else {
            throw UsageError("unknown curve '" + name + "'");
        }
    }
    Output out(a.out);
    if (a.format == "json") {
        json j;
        j["dimension"] = std::vector<int>(dim.counts().begin(), dim.counts().end());
        for (const auto& [name, c] : rows) j["curves"][name] = curve_json(c);
        for (const auto& [name, d] : diversity_only) j["diversity_only"][name] = d;
        out.stream() << j.dump(2) << '\n';
    } else {
        out.stream() << "curve,r,d\n";
        for (const auto& [name, c] : rows) {
            for (const auto& v : c.vertices()) out.stream() << name << ',' << to_string(v.r) << ',' << to_string(v.d) << '\n';
        }
        // Unequal paths: only d(0) is known.
        for (const auto& [name, d] : diversity_only) out.stream() << name << ",0," << d << '\n';
    }
    return 0;
}

// ---- reduce ---------------------------------------------------------------

int run_reduce(const std::string& dim_text, const std::string& path, const std::string& format) {
    const Dimension dim = parse_dimension(dim_text);
    const auto r = analyze(dim);
    const Dimension practical = practical_vertical_reduction(dim);
    Output out(path);
    if (format == "json") {
        auto vec = [](const Dimension& d) { return std::vector<int>(d.counts().begin(), d.counts().end()); };
        json j{{"dimension", vec(dim)},
               {"order", r.order},
               {"minimal_form", vec(r.minimal_form)},
               {"minimal_vertical_form", vec(r.minimal_vertical_form)},
               {"n_bar", r.n_bar},
               {"practical_vertical_reduction", vec(practical)},
               {"practical_equivalent", equivalent(dim, practical)}};
        out.stream() << j.dump(2) << '\n';
    } else {
        out.stream() << "dimension " << dim.str() << '\n'
                     << "order " << r.order << '\n'
                     << "minimal_form " << r.minimal_form.str() << '\n'
                     << "minimal_vertical_form " << r.minimal_vertical_form.str() << '\n'
                     << "n_bar " << r.n_bar << '\n'
                     << "practical_vertical_reduction " << practical.str() << '\n'
                     << "practical_equivalent " << (equivalent(dim, practical) ? "true" : "false") << '\n';
    }
    return 0;
}

// ---- partition ------------------------------------------------------------

int run_partition(const std::string& dim_text, bool max, bool min_full, const std::string& path) {
    const Dimension dim = parse_dimension(dim_text);
    if (max == min_full) throw UsageError("choose exactly one of --max and --min-full-div");
    Partition p;
    if (max) {
        p = max_partition(dim);
    } else if (dim.hops() == 2) {
        p = min_full_div_partition_2hop(dim[0], dim[1], dim[2]).second;
    } else {
        p = min_full_div_partition_search(dim).second;
    }
    json j = partition_to_json(dim, p);
    j["size"] = p.size();
    j["independent"] = is_independent(dim, p);
    j["diversity"] = partition_diversity(dim, p);
    j["max_diversity"] = max_diversity(dim);
    j["full_diversity"] = is_full_diversity(dim, p);
    Output out(path);
    out.stream() << j.dump(2) << '\n';
    return 0;
}

// ---- simulate -------------------------------------------------------------

struct SimArgs {
    std::string dim;
    std::string scheme;
    double rate = 2.0;
    bool rate_scaled = false;
    std::string snr;
    std::string trials = "100000";
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    std::string out;
    std::string manifest;
    std::string format = "csv";
    std::string decode;
    std::string partition;
    std::string code;
    int qam_order = 4;
    bool fit_slope = false;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("MHDMT_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw UsageError("MHDMT_SEED must be a non-negative integer");
    }
    return 1;
}

int run_simulate(const SimArgs& a) {
    const Dimension dim = parse_dimension(a.dim);
    const SnrGrid grid = parse_grid(a.snr);
    const std::uint64_t trials = parse_trials(a.trials);
    const std::uint64_t seed = a.seed ? *a.seed : default_seed();
    const unsigned workers = a.workers == 0 ? std::max(1U, std::thread::hardware_concurrency()) : a.workers;
    const bool coded = a.scheme == "coded-af" || a.scheme == "coded-ff";
    const std::string base = coded ? a.scheme.substr(6) : a.scheme;

    Scheme scheme{};
    try {
        scheme = parse_scheme(base);
    } catch (const std::invalid_argument&) {
        throw UsageError("unknown scheme '" + a.scheme + "'");
    }
    const auto given = load_partition(a.partition, dim);
    SchemeConfig cfg;
    std::optional<Partition> used_partition;
    switch (scheme) {
        case Scheme::df:
            if (a.decode.empty()) throw UsageError("scheme df needs --decode");
            cfg = SchemeConfig::df(DecodeSet(parse_ints(a.decode), dim.hops()));
            break;
        case Scheme::ff:
            used_partition = partition_or_default(given, dim, a.scheme);
            cfg = SchemeConfig::ff(dim, *used_partition);
            break;
        case Scheme::parallel_af:
            used_partition = partition_or_default(given, dim, a.scheme);
            cfg = SchemeConfig::parallel_af(dim, *used_partition);
            break;
        default:
            if (given) throw UsageError("scheme " + a.scheme + " takes no partition");
            cfg = SchemeConfig::plain(scheme);
    }
    if (scheme != Scheme::df && !a.decode.empty()) throw UsageError("--decode only applies to df");

    std::optional<Codebook> cb;
    std::string code = a.code;
    if (coded) {
        if (code.empty()) code = scheme == Scheme::ff ? "golden-parallel" : "alamouti";
        const QamAlphabet q = qam(a.qam_order);
        if (code == "alamouti") {
            cb = alamouti(q);
        } else if (code == "golden") {
            cb = golden(q, 0);
        } else if (code == "golden-parallel") {
            cb = golden(q, 1);
        } else {
            throw UsageError("unknown code '" + code + "'");
        }
        if (code_subchannel_count(dim, cfg) != cb->K) {
            throw UsageError("code " + code + " has " + std::to_string(cb->K) + " blocks but the scheme offers " +
                             std::to_string(code_subchannel_count(dim, cfg)));
        }
    } else if (!code.empty()) {
        throw UsageError("--code only applies to coded schemes");
    }

    json config{{"command", "simulate"},
                {"dimension", std::vector<int>(dim.counts().begin(), dim.counts().end())},
                {"scheme", a.scheme},
                {"snr_db", {{"start", grid.start}, {"step", grid.step}, {"stop", grid.stop}}},
                {"trials", trials},
                {"seed", seed}};
    if (coded) {
        config["code"] = code;
        config["qam"] = a.qam_order;
    } else {
        config["rate"] = a.rate;
        config["rate_policy"] = a.rate_scaled ? "scaled" : "fixed";
    }
    if (scheme == Scheme::df) config["decode"] = cfg.decode.indices();
    if (used_partition) config["partition"] = partition_to_json(dim, *used_partition);

    std::vector<OutageEstimate> points;
    if (coded) {
        points = simulate_ser(dim, cfg, *cb, grid.points, trials, seed, workers);
    } else {
        points = estimate_outage_grid(dim, cfg, RatePolicy{a.rate, a.rate_scaled}, grid.points, trials, seed, workers);
    }

    json manifest{{"tool", "mhdmt"}, {"version", kVersion}, {"config", config}, {"config_hash", sha1_hex(config.dump())},
                  {"workers", workers}, {"columns", {"snr_db", "rate", "trials", "outages", "p_hat", "ci_lo", "ci_hi"}}};

    if (a.fit_slope) {
        const double slope = estimate_slope(points);
        manifest["slope"] = slope;
        std::cerr << "slope " << format_double("%.4f", slope) << '\n';
    }

    Output out(a.out);
    if (a.format == "json") {
        json pts = json::array();
        for (const auto& p : points) {
            pts.push_back({{"snr_db", p.snr_db}, {"rate", p.rate_bpcu}, {"trials", p.trials}, {"outages", p.outage_count},
                           {"p_hat", p.p_hat}, {"ci_lo", p.ci_lo}, {"ci_hi", p.ci_hi}});
        }
        out.stream() << json{{"manifest", manifest}, {"points", pts}}.dump(2) << '\n';
    } else {
        write_csv(out.stream(), points);
    }
    std::string manifest_path = a.manifest;
    if (manifest_path.empty() && !a.out.empty() && a.out != "-" && a.format != "json") manifest_path = a.out + ".manifest.json";
    if (!manifest_path.empty()) {
        std::ofstream m(manifest_path, std::ios::binary);
        if (!m) throw UsageError("cannot open '" + manifest_path + "' for writing");
        m << manifest.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mhdmt: diversity-multiplexing tradeoff of MIMO multihop relay channels"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    DmtArgs dmt;
    auto* dmt_cmd = app.add_subcommand("dmt", "Tradeoff curve vertices");
    dmt_cmd->add_option("--dim", dmt.dim, "Antenna counts, source to destination, e.g. 2,4,3")->required();
    dmt_cmd->add_option("--curve", dmt.curves, "rp, cutset, df, serial, ff-bound, parallel-af (repeatable)")
        ->delimiter(',');
    dmt_cmd->add_option("--decode", dmt.decode, "Decoding layers for the serial curve, e.g. 2,3");
    dmt_cmd->add_option("--modes", dmt.modes, "Flip mode count K' for ff-bound");
    dmt_cmd->add_option("--partition", dmt.partition, "Partition JSON for parallel-af");
    dmt_cmd->add_option("--out", dmt.out, "Output file (default stdout)");
    dmt_cmd->add_option("--format", dmt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    std::string reduce_dim;
    std::string reduce_out;
    std::string reduce_format = "text";
    auto* reduce_cmd = app.add_subcommand("reduce", "Channel order, minimal forms and vertical reduction");
    reduce_cmd->add_option("--dim", reduce_dim, "Antenna counts")->required();
    reduce_cmd->add_option("--out", reduce_out, "Output file (default stdout)");
    reduce_cmd->add_option("--format", reduce_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string part_dim;
    std::string part_out;
    bool part_max = false;
    bool part_min = false;
    auto* part_cmd = app.add_subcommand("partition", "Parallel AF partitions as JSON");
    part_cmd->add_option("--dim", part_dim, "Antenna counts")->required();
    part_cmd->add_flag("--max", part_max, "Largest independent single-antenna partition");
    part_cmd->add_flag("--min-full-div", part_min, "Smallest full-diversity partition");
    part_cmd->add_option("--out", part_out, "Output file (default stdout)");

    SimArgs sim;
    std::uint64_t seed_value = 0;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo outage or codeword error rate");
    sim_cmd->add_option("--dim", sim.dim, "Antenna counts")->required();
    sim_cmd->add_option("--scheme", sim.scheme, "af, pf, df, parallel-af, ff, svd-align, coded-af, coded-ff")->required();
    sim_cmd->add_option("--rate", sim.rate, "Target rate in bits per channel use (or multiplexing gain with --rate-scaled)");
    sim_cmd->add_flag("--rate-scaled", sim.rate_scaled, "Use rate * log2(snr)");
    sim_cmd->add_option("--snr", sim.snr, "SNR grid in dB as start:step:stop")->required();
    sim_cmd->add_option("--trials", sim.trials, "Trials per SNR point, e.g. 1e6");
    auto* seed_opt = sim_cmd->add_option("--seed", seed_value, "Seed (default $MHDMT_SEED, else 1)");
    sim_cmd->add_option("--workers", sim.workers, "Worker threads, 0 for all cores");
    sim_cmd->add_option("--out", sim.out, "Output file (default stdout)");
    sim_cmd->add_option("--manifest", sim.manifest, "Manifest file (default <out>.manifest.json)");
    sim_cmd->add_option("--format", sim.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sim_cmd->add_option("--decode", sim.decode, "Decoding layers for df, e.g. 2,3");
    sim_cmd->add_option("--partition", sim.partition, "Partition JSON for ff or parallel-af");
    sim_cmd->add_option("--code", sim.code, "alamouti, golden or golden-parallel");
    sim_cmd->add_flag("--fit-slope", sim.fit_slope, "Fit the log-log slope and report it on stderr");
    sim_cmd->add_option("--qam", sim.qam_order, "QAM order for coded schemes")->check(CLI::IsMember({4, 16}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*dmt_cmd) return run_dmt(dmt);
        if (*reduce_cmd) return run_reduce(reduce_dim, reduce_out, reduce_format);
        if (*part_cmd) return run_partition(part_dim, part_max, part_min, part_out);
        if (*sim_cmd) {
            if (*seed_opt) sim.seed = seed_value;
            return run_simulate(sim);
        }
    } catch (const NumericalError& e) {
        std::cerr << "mhdmt: numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "mhdmt: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "mhdmt: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "mhdmt: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

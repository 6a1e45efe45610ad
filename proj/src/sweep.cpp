// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The swiptrelay Authors
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

#include "swipt/sweep.hpp"

#include "swipt/af_solver.hpp"
#include "swipt/df_solver.hpp"
#include "swipt/error.hpp"
#include "swipt/rng.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace swipt {

namespace {

constexpr std::array<std::pair<Scheme, std::string_view>, 6> kSchemeLabels{{
    {Scheme::PS_DF, "PS-DF"},
    {Scheme::PS_AF, "PS-AF"},
    {Scheme::BRS_DF, "BRS-DF"},
    {Scheme::BRS_AF, "BRS-AF"},
    {Scheme::TS_DF, "TS-DF"},
    {Scheme::TS_AF, "TS-AF"},
}};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    for (;;) {
        const auto pos = s.find(sep);
        out.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos)
            return out;
        s.remove_prefix(pos + 1);
    }
}

template <typename T>
T parse_value(std::string_view key, std::string_view text)
{
    text = trim(text);
    T v{};
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw std::invalid_argument("bad value for '" + std::string(key) + "': '" + std::string(text) + "'");
    return v;
}

bool parse_bool(std::string_view key, std::string_view text)
{
    text = trim(text);
    if (text == "true" || text == "1" || text == "yes" || text == "on")
        return true;
    if (text == "false" || text == "0" || text == "no" || text == "off")
        return false;
    throw std::invalid_argument("bad boolean for '" + std::string(key) + "': '" + std::string(text) + "'");
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn &&fn)
{
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (workers == 1) {
        fn(std::size_t{0}, n);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(n, w * chunk);
        const std::size_t end = std::min(n, begin + chunk);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
}

} // namespace

std::string_view label(Scheme s)
{
    for (const auto &[scheme, text] : kSchemeLabels)
        if (scheme == s)
            return text;
    return "?";
}

std::optional<Scheme> parse_scheme(std::string_view text)
{
    for (const auto &[scheme, name] : kSchemeLabels)
        if (name == text)
            return scheme;
    return std::nullopt;
}

double scheme_rate(Scheme s, const SystemParams &params, const ChannelRealization &ch, double ts_grid_step)
{
    switch (s) {
    case Scheme::PS_DF:
        return solve_df(params, ch).rate;
    case Scheme::PS_AF:
        return solve_af(params, ch).rate;
    case Scheme::BRS_DF:
        return solve_brs(params, ch, Protocol::DF).rate;
    case Scheme::BRS_AF:
        return solve_brs(params, ch, Protocol::AF).rate;
    case Scheme::TS_DF:
        return solve_ts(params, ch, Protocol::DF, ts_grid_step).rate;
    case Scheme::TS_AF:
        return solve_ts(params, ch, Protocol::AF, ts_grid_step).rate;
    }
    throw std::invalid_argument("unknown scheme");
}

// ------------------------------------------------------------------------
// Configuration

const std::vector<std::string> &config_keys()
{
    static const std::vector<std::string> keys{
        "seed",       "trials",     "k",          "zeta",          "theta",           "snr_db_min",
        "snr_db_max", "snr_db_step", "schemes",   "source_x",      "source_y",        "dest_x",
        "dest_y",     "square_center_x", "square_center_y", "square_side", "redraw_topology", "ts_grid_step",
        "threads"};
    return keys;
}

void apply_setting(SweepConfig &cfg, std::string_view key, std::string_view value)
{
    key = trim(key);
    if (key == "seed")
        cfg.master_seed = parse_value<std::uint64_t>(key, value);
    else if (key == "trials")
        cfg.trials = parse_value<std::size_t>(key, value);
    else if (key == "k")
        cfg.k = parse_value<std::size_t>(key, value);
    else if (key == "zeta")
        cfg.zeta = parse_value<double>(key, value);
    else if (key == "theta")
        cfg.geometry.theta = parse_value<double>(key, value);
    else if (key == "snr_db_min")
        cfg.snr_db_min = parse_value<double>(key, value);
    else if (key == "snr_db_max")
        cfg.snr_db_max = parse_value<double>(key, value);
    else if (key == "snr_db_step")
        cfg.snr_db_step = parse_value<double>(key, value);
    else if (key == "schemes") {
        cfg.schemes.clear();
        for (auto item : split(value, ',')) {
            item = trim(item);
            if (item.empty())
                continue;
            const auto s = parse_scheme(item);
            if (!s)
                throw std::invalid_argument("unknown scheme '" + std::string(item) +
                                            "' (expected PS-DF, PS-AF, BRS-DF, BRS-AF, TS-DF or TS-AF)");
            cfg.schemes.push_back(*s);
        }
    }
    else if (key == "source_x")
        cfg.geometry.source.x = parse_value<double>(key, value);
    else if (key == "source_y")
        cfg.geometry.source.y = parse_value<double>(key, value);
    else if (key == "dest_x")
        cfg.geometry.destination.x = parse_value<double>(key, value);
    else if (key == "dest_y")
        cfg.geometry.destination.y = parse_value<double>(key, value);
    else if (key == "square_center_x")
        cfg.geometry.square_center.x = parse_value<double>(key, value);
    else if (key == "square_center_y")
        cfg.geometry.square_center.y = parse_value<double>(key, value);
    else if (key == "square_side")
        cfg.geometry.square_side = parse_value<double>(key, value);
    else if (key == "redraw_topology")
        cfg.redraw_topology = parse_bool(key, value);
    else if (key == "ts_grid_step")
        cfg.ts_grid_step = parse_value<double>(key, value);
    else if (key == "threads")
        cfg.threads = parse_value<unsigned>(key, value);
    else
        throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
}

SweepConfig parse_config(std::istream &in, SweepConfig base)
{
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view text(line);
        text = trim(text.substr(0, text.find('#')));
        if (text.empty())
            continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'key = value'");
        try {
            apply_setting(base, text.substr(0, eq), text.substr(eq + 1));
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return base;
}

SweepConfig load_config(const std::string &path, SweepConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw IoError(path, "cannot open config file");
    return parse_config(in, std::move(base));
}

std::vector<std::string> config_errors(const SweepConfig &cfg)
{
    std::vector<std::string> errs;
    auto finite = [](double v) { return std::isfinite(v); };
    if (cfg.trials < 1)
        errs.push_back("trials: must be >= 1");
    if (cfg.k < 1)
        errs.push_back("k: must be >= 1");
    if (!(cfg.zeta >= 0.0 && cfg.zeta <= 1.0))
        errs.push_back("zeta: must lie in [0,1]");
    if (!(cfg.geometry.theta >= 0.0) || !finite(cfg.geometry.theta))
        errs.push_back("theta: must be finite and >= 0");
    if (!finite(cfg.snr_db_min))
        errs.push_back("snr_db_min: must be finite");
    if (!finite(cfg.snr_db_max) || cfg.snr_db_max < cfg.snr_db_min)
        errs.push_back("snr_db_max: must be finite and >= snr_db_min");
    if (!(cfg.snr_db_step > 0.0) || !finite(cfg.snr_db_step))
        errs.push_back("snr_db_step: must be finite and > 0");
    if (cfg.schemes.empty())
        errs.push_back("schemes: must name at least one scheme");
    for (std::size_t i = 0; i < cfg.schemes.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (cfg.schemes[i] == cfg.schemes[j])
                errs.push_back("schemes: duplicate " + std::string(label(cfg.schemes[i])));
    const Geometry &g = cfg.geometry;
    if (!finite(g.source.x) || !finite(g.source.y))
        errs.push_back("source_x/source_y: must be finite");
    if (!finite(g.destination.x) || !finite(g.destination.y))
        errs.push_back("dest_x/dest_y: must be finite");
    if (!finite(g.square_center.x) || !finite(g.square_center.y))
        errs.push_back("square_center_x/square_center_y: must be finite");
    if (!(g.square_side >= 0.0) || !finite(g.square_side))
        errs.push_back("square_side: must be finite and >= 0");
    if (!(cfg.ts_grid_step > 0.0 && cfg.ts_grid_step <= 0.01))
        errs.push_back("ts_grid_step: must lie in (0, 0.01]");
    if (cfg.threads < 1)
        errs.push_back("threads: must be >= 1");
    return errs;
}

std::vector<double> snr_points_db(const SweepConfig &cfg)
{
    const auto n = static_cast<std::size_t>(std::floor((cfg.snr_db_max - cfg.snr_db_min) / cfg.snr_db_step + 1e-9));
    std::vector<double> pts;
    pts.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        pts.push_back(cfg.snr_db_min + static_cast<double>(i) * cfg.snr_db_step);
    return pts;
}

// ------------------------------------------------------------------------
// Simulation

ChannelSource seeded_channels(const SweepConfig &cfg)
{
    const std::uint64_t master = cfg.master_seed;
    const std::size_t k = cfg.k;
    const Geometry geo = cfg.geometry;
    std::optional<Topology> fixed;
    if (!cfg.redraw_topology)
        fixed = gen_topology(rng::derive_seed(master, {1}), k, geo);
    return [=](std::size_t trial) {
        const std::uint64_t trial_seed = rng::derive_seed(master, {2, trial});
        if (fixed)
            return draw_channels(*fixed, trial_seed);
        return draw_channels(gen_topology(rng::derive_seed(master, {1, trial}), k, geo), trial_seed);
    };
}

namespace {

void require_valid(const SweepConfig &cfg)
{
    const auto errs = config_errors(cfg);
    if (errs.empty())
        return;
    std::string msg = "invalid sweep configuration:";
    for (const auto &e : errs)
        msg += "\n  " + e;
    throw std::invalid_argument(msg);
}

} // namespace

std::vector<PointSamples> simulate(const SweepConfig &cfg, const ChannelSource &source)
{
    require_valid(cfg);
    const ChannelSource draw = source ? source : seeded_channels(cfg);

    std::vector<ChannelRealization> channels(cfg.trials);
    for (std::size_t t = 0; t < cfg.trials; ++t)
        channels[t] = draw(t);

    std::vector<PointSamples> out;
    for (double snr_db : snr_points_db(cfg)) {
        PointSamples pt;
        pt.snr_db = snr_db;
        pt.rates.assign(cfg.schemes.size(), std::vector<double>(cfg.trials));
        const SystemParams params{std::pow(10.0, snr_db / 10.0), cfg.zeta};
        // Each trial writes only its own slot; no reduction happens here.
        parallel_for(cfg.trials, cfg.threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t t = begin; t < end; ++t)
                for (std::size_t s = 0; s < cfg.schemes.size(); ++s)
                    pt.rates[s][t] = scheme_rate(cfg.schemes[s], params, channels[t], cfg.ts_grid_step);
        });
        out.push_back(std::move(pt));
    }
    return out;
}

SweepRow summarize(double snr_db, Scheme scheme, const std::vector<double> &rates)
{
    SweepRow row;
    row.snr_db = snr_db;
    row.scheme = std::string(label(scheme));
    row.trials = rates.size();
    if (rates.empty())
        return row;
    double sum = 0.0;
    for (double r : rates)
        sum += r;
    row.mean_rate = sum / static_cast<double>(rates.size());
    if (rates.size() > 1) {
        double ss = 0.0;
        for (double r : rates)
            ss += (r - row.mean_rate) * (r - row.mean_rate);
        row.std_rate = std::sqrt(ss / static_cast<double>(rates.size() - 1));
    }
    return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig &cfg, const ChannelSource &source)
{
    std::vector<SweepRow> rows;
    for (const PointSamples &pt : simulate(cfg, source))
        for (std::size_t s = 0; s < cfg.schemes.size(); ++s)
            rows.push_back(summarize(pt.snr_db, cfg.schemes[s], pt.rates[s]));
    return rows;
}

// ------------------------------------------------------------------------
// Output

std::string format_number(double v)
{
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 6);
    if (ec != std::errc{})
        throw std::runtime_error("number formatting failed");
    return std::string(buf.data(), end);
}

namespace {

void sort_rows(std::vector<SweepRow> &rows)
{
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow &a, const SweepRow &b) {
        if (a.snr_db != b.snr_db)
            return a.snr_db < b.snr_db;
        return a.scheme < b.scheme;
    });
}

std::ofstream open_output(const std::string &path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError(path, "cannot open for writing");
    return out;
}

void finish_output(std::ofstream &out, const std::string &path)
{
    out.flush();
    if (!out)
        throw IoError(path, "write failed");
}

} // namespace

void emit_csv(std::vector<SweepRow> rows, std::ostream &out)
{
    if (rows.empty())
        throw std::invalid_argument("refusing to write a CSV with no rows");
    sort_rows(rows);
    std::string text = "snr_db,scheme,mean_rate,std_rate,trials\n";
    for (const SweepRow &r : rows) {
        text += format_number(r.snr_db);
        text += ',';
        text += r.scheme;
        text += ',';
        text += format_number(r.mean_rate);
        text += ',';
        text += format_number(r.std_rate);
        text += ',';
        text += std::to_string(r.trials);
        text += '\n';
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

void emit_csv(std::vector<SweepRow> rows, const std::string &path)
{
    if (rows.empty())
        throw std::invalid_argument("refusing to write a CSV with no rows");
    std::ofstream out = open_output(path);
    emit_csv(std::move(rows), out);
    finish_output(out, path);
}

std::vector<SweepRow> read_csv(std::istream &in)
{
    std::string line;
    if (!std::getline(in, line) || trim(line) != "snr_db,scheme,mean_rate,std_rate,trials")
        throw std::invalid_argument("CSV header must be 'snr_db,scheme,mean_rate,std_rate,trials'");
    std::vector<SweepRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view text = trim(line);
        if (text.empty())
            continue;
        const auto f = split(text, ',');
        if (f.size() != 5)
            throw std::invalid_argument("CSV line " + std::to_string(lineno) + ": expected 5 fields");
        try {
            SweepRow r;
            r.snr_db = parse_value<double>("snr_db", f[0]);
            r.scheme = std::string(trim(f[1]));
            r.mean_rate = parse_value<double>("mean_rate", f[2]);
            r.std_rate = parse_value<double>("std_rate", f[3]);
            r.trials = parse_value<std::size_t>("trials", f[4]);
            if (r.scheme.empty())
                throw std::invalid_argument("empty scheme label");
            rows.push_back(std::move(r));
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("CSV line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return rows;
}

std::vector<SweepRow> read_csv_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError(path, "cannot open CSV file");
    return read_csv(in);
}

void emit_plot_script(std::vector<SweepRow> rows, std::ostream &out)
{
    if (rows.empty())
        throw std::invalid_argument("refusing to plot an empty row set");
    sort_rows(rows);

    // Series in label order, points in SNR order.
    std::vector<std::string> labels;
    for (const SweepRow &r : rows)
        if (std::find(labels.begin(), labels.end(), r.scheme) == labels.end())
            labels.push_back(r.scheme);
    std::sort(labels.begin(), labels.end());

    std::string text =
        "#!/usr/bin/env python3\n"
        "# Mean end-to-end rate versus transmit SNR, one series per scheme.\n"
        "# Generated by swiptsim; usage: python3 <this script> [output.png]\n"
        "import sys\n"
        "\n"
        "import matplotlib\n"
        "matplotlib.use(\"Agg\")\n"
        "import matplotlib.pyplot as plt\n"
        "\n"
        "SERIES = [\n";
    for (const std::string &name : labels) {
        std::string snr, mean;
        for (const SweepRow &r : rows) {
            if (r.scheme != name)
                continue;
            snr += (snr.empty() ? "" : ", ") + format_number(r.snr_db);
            mean += (mean.empty() ? "" : ", ") + format_number(r.mean_rate);
        }
        text += "    (\"" + name + "\", [" + snr + "], [" + mean + "]),\n";
    }
    text += "]\n"
            "\n"
            "\n"
            "def main():\n"
            "    out = sys.argv[1] if len(sys.argv) > 1 else \"rates.png\"\n"
            "    fig, ax = plt.subplots(figsize=(6.4, 4.8))\n"
            "    for label, snr_db, rate in SERIES:\n"
            "        ax.plot(snr_db, rate, marker=\"o\", label=label)\n"
            "    ax.set_xlabel(\"Transmit SNR P (dB)\")\n"
            "    ax.set_ylabel(\"Mean rate (bits/s/Hz)\")\n"
            "    ax.grid(True, linestyle=\":\")\n"
            "    ax.legend()\n"
            "    fig.tight_layout()\n"
            "    fig.savefig(out, dpi=150)\n"
            "\n"
            "\n"
            "if __name__ == \"__main__\":\n"
            "    main()\n";
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

void emit_plot_script(std::vector<SweepRow> rows, const std::string &path)
{
    if (rows.empty())
        throw std::invalid_argument("refusing to plot an empty row set");
    std::ofstream out = open_output(path);
    emit_plot_script(std::move(rows), out);
    finish_output(out, path);
}

} // namespace swipt

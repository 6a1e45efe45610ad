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

// swiptsim: optimal power splitting for multi-relay SWIPT links, and the
// Monte Carlo rate comparison against best-relay and time-switching schemes.
//
// Exit codes: 0 success, 1 validation failure, 2 I/O error.

#include "swipt/af_solver.hpp"
#include "swipt/df_solver.hpp"
#include "swipt/error.hpp"
#include "swipt/oracle.hpp"
#include "swipt/sweep.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

std::vector<double> parse_list(const std::string &name, const std::string &text)
{
    std::vector<double> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        double v = 0.0;
        const auto first = item.find_first_not_of(' ');
        const auto last = item.find_last_not_of(' ');
        if (first == std::string::npos)
            throw std::invalid_argument(name + ": empty list entry");
        const char *b = item.data() + first;
        const char *e = item.data() + last + 1;
        const auto [p, ec] = std::from_chars(b, e, v);
        if (ec != std::errc{} || p != e)
            throw std::invalid_argument(name + ": bad number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument(name + ": empty list");
    return out;
}

std::string join(const std::vector<double> &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + swipt::format_number(v[i]);
    return s;
}

struct SweepArgs
{
    std::string config;
    std::string out;
    std::string plot;
    std::map<std::string, std::string> overrides;
};

int run_sweep(const SweepArgs &args)
{
    swipt::SweepConfig cfg;
    if (!args.config.empty())
        cfg = swipt::load_config(args.config);
    for (const auto &[key, value] : args.overrides)
        swipt::apply_setting(cfg, key, value);

    const auto rows = swipt::run_sweep(cfg);
    if (args.out.empty() || args.out == "-")
        swipt::emit_csv(rows, std::cout);
    else
        swipt::emit_csv(rows, args.out);
    if (!args.plot.empty())
        swipt::emit_plot_script(rows, args.plot);
    return kExitOk;
}

int run_solve(const std::string &protocol, const std::string &h, const std::string &g, double power, double zeta)
{
    swipt::SystemParams params{power, zeta};
    swipt::ChannelRealization ch{parse_list("--h", h), parse_list("--g", g)};
    swipt::PowerSplitSolution sol;
    if (protocol == "df")
        sol = swipt::solve_df(params, ch);
    else
        sol = swipt::solve_af(params, ch);

    std::cout << "protocol: " << protocol << '\n'
              << "alpha: " << join(sol.alpha) << '\n'
              << "rate: " << swipt::format_number(sol.rate) << '\n'
              << "snr_first_hop: " << swipt::format_number(sol.snr_first_hop) << '\n'
              << "snr_second_hop: " << swipt::format_number(sol.snr_second_hop) << '\n';
    if (sol.snr_eff)
        std::cout << "snr_eff: " << swipt::format_number(*sol.snr_eff) << '\n';
    return kExitOk;
}

int run_verify(std::size_t instances, std::uint64_t seed)
{
    bool ok = true;
    for (const auto &r : swipt::oracle::run_verification(seed, instances)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.instances << " instances): " << r.detail
                  << '\n';
        ok = ok && r.passed;
    }
    return ok ? kExitOk : kExitValidation;
}

int run_plot(const std::string &csv, const std::string &out)
{
    swipt::emit_plot_script(swipt::read_csv_file(csv), out);
    return kExitOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Optimal power splitting for multi-relay SWIPT cooperative links"};
    app.require_subcommand(1);

    SweepArgs sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Monte Carlo rate sweep over transmit SNR, CSV output");
    sweep_cmd->add_option("--config", sweep.config, "key = value configuration file");
    sweep_cmd->add_option("--out", sweep.out, "CSV destination (stdout if omitted)");
    sweep_cmd->add_option("--plot", sweep.plot, "also write a matplotlib script here");
    std::map<std::string, std::string> flag_values;
    for (const auto &key : swipt::config_keys())
        sweep_cmd->add_option("--" + key, flag_values[key], "overrides config key '" + key + "'");

    std::string protocol = "df", h, g;
    double power = 1.0, zeta = 0.6;
    auto *solve_cmd = app.add_subcommand("solve", "Optimal power-splitting ratios for one channel realization");
    // --h is a gain list here, not help.
    solve_cmd->set_help_flag("--help", "Print this help message and exit");
    solve_cmd->add_option("--protocol", protocol, "relaying protocol")->check(CLI::IsMember({"df", "af"}));
    solve_cmd->add_option("--h", h, "source->relay power gains, comma separated")->required();
    solve_cmd->add_option("--g", g, "relay->destination power gains, comma separated")->required();
    solve_cmd->add_option("--power", power, "source transmit power (linear, noise-normalised)");
    solve_cmd->add_option("--zeta", zeta, "energy conversion efficiency");

    std::size_t instances = 100;
    std::uint64_t seed = 1;
    auto *verify_cmd = app.add_subcommand("verify", "Check the solvers against brute-force grid oracles");
    verify_cmd->add_option("--instances", instances, "random instances per suite");
    verify_cmd->add_option("--seed", seed, "instance generator seed");

    std::string plot_csv, plot_out;
    auto *plot_cmd = app.add_subcommand("plot", "Write a matplotlib script for a sweep CSV");
    plot_cmd->add_option("--csv", plot_csv, "sweep CSV")->required();
    plot_cmd->add_option("--out", plot_out, "script destination")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*sweep_cmd) {
            for (const auto &key : swipt::config_keys())
                if (sweep_cmd->count("--" + key) > 0)
                    sweep.overrides[key] = flag_values[key];
            return run_sweep(sweep);
        }
        if (*solve_cmd)
            return run_solve(protocol, h, g, power, zeta);
        if (*verify_cmd)
            return run_verify(instances, seed);
        if (*plot_cmd)
            return run_plot(plot_csv, plot_out);
    } catch (const swipt::IoError &e) {
        std::cerr << "swiptsim: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "swiptsim: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitValidation;
}

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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "swipt/model.hpp"
#include "swipt/oracle.hpp"
#include "swipt/rng.hpp"
#include "swipt/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace swipt;

namespace {

constexpr std::uint64_t kSeed = 20160122;
constexpr std::size_t kSweepTrials = 10000;

struct Outcome
{
    bool passed = false;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string &title, const std::function<Outcome()> &run)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = run();
    } catch (const std::exception &e) {
        o = Outcome{false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] AC%d %s: %s (%.1f s)\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!o.passed)
        ++failures;
}

Outcome from_check(const oracle::CheckResult &r)
{
    return Outcome{r.passed, std::to_string(r.instances) + " instances; " + r.detail};
}

Outcome timed(Outcome o, std::chrono::steady_clock::time_point t0, double limit_s)
{
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= limit_s) {
        o.passed = false;
        o.detail += "; runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit_s) + " s";
    }
    return o;
}

// Paired mean difference a - b and its standard error over trials.
struct Paired
{
    double mean = 0.0;
    double se = 0.0;
};

Paired paired(const std::vector<double> &a, const std::vector<double> &b)
{
    const std::size_t n = a.size();
    double sum = 0.0;
    for (std::size_t t = 0; t < n; ++t)
        sum += a[t] - b[t];
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t t = 0; t < n; ++t)
        ss += (a[t] - b[t] - mean) * (a[t] - b[t] - mean);
    return Paired{mean, std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n))};
}

std::size_t index_of(const SweepConfig &cfg, Scheme s)
{
    for (std::size_t i = 0; i < cfg.schemes.size(); ++i)
        if (cfg.schemes[i] == s)
            return i;
    throw std::logic_error("scheme not in sweep");
}

SweepConfig paper_config()
{
    SweepConfig cfg; // defaults are the reference geometry, 0..40 dB
    cfg.master_seed = kSeed;
    cfg.trials = kSweepTrials;
    cfg.threads = 4;
    return cfg;
}

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

} // namespace

int main()
{
    report(1, "DF closed form vs joint grid (step 1e-3, slack 1e-3, K=1..3, <30 s)", [] {
        const auto t0 = std::chrono::steady_clock::now();
        return timed(from_check(oracle::check_df_oracle(kSeed, 100, 1e-3, 1e-3)), t0, 30.0);
    });

    report(2, "DF equalisation on unclipped instances (rel. tol 1e-9)",
           [] { return from_check(oracle::check_df_equalization(kSeed, 100, 1e-9)); });

    report(3, "DF ratios invariant under P -> 100 P (exact)",
           [] { return from_check(oracle::check_df_power_invariance(kSeed, 100)); });

    report(4, "AF 1-D closed form vs grid (step 1e-6; |da| <= 2e-6, rel. gap <= 1e-9; <60 s)", [] {
        const auto t0 = std::chrono::steady_clock::now();
        return timed(from_check(oracle::check_af_single_oracle(kSeed, 1000, 1e-6, 2e-6, 1e-9)), t0, 60.0);
    });

    report(5, "AF decomposition vs joint 2-D grid (step 1e-3, slack 1e-3)",
           [] { return from_check(oracle::check_af_joint_oracle(kSeed, 100, 1e-3, 1e-3)); });

    report(6, "PS-AF >= BRS-AF on every paired trial (zero tolerance)", [] {
        SweepConfig cfg = paper_config();
        cfg.schemes = {Scheme::PS_AF, Scheme::BRS_AF};
        std::size_t checked = 0, violations = 0;
        for (const PointSamples &pt : simulate(cfg))
            for (std::size_t t = 0; t < cfg.trials; ++t, ++checked)
                violations += pt.rates[0][t] >= pt.rates[1][t] ? 0 : 1;
        return Outcome{violations == 0,
                       std::to_string(checked) + " trial/SNR pairs, " + std::to_string(violations) + " violations"};
    });

    // Criteria 7 and 8 share one paired sweep at the reference geometry.
    const auto t_sweep = std::chrono::steady_clock::now();
    SweepConfig cfg = paper_config();
    std::vector<PointSamples> samples;
    std::string sweep_error;
    try {
        samples = simulate(cfg);
    } catch (const std::exception &e) {
        sweep_error = e.what();
    }
    const double sweep_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_sweep).count();

    report(7, "Fig. 2 trend: PS-DF >= PS-AF from 20 dB, PS-DF > BRS-DF everywhere (> 3 paired SE, <5 min)", [&] {
        if (!sweep_error.empty())
            return Outcome{false, sweep_error};
        const std::size_t ps_df = index_of(cfg, Scheme::PS_DF);
        const std::size_t ps_af = index_of(cfg, Scheme::PS_AF);
        const std::size_t brs_df = index_of(cfg, Scheme::BRS_DF);
        bool ok = sweep_secs < 300.0;
        double worst_af = 1e300, worst_brs = 1e300;
        std::string where;
        for (const PointSamples &pt : samples) {
            const Paired vs_brs = paired(pt.rates[ps_df], pt.rates[brs_df]);
            worst_brs = std::min(worst_brs, vs_brs.mean / vs_brs.se);
            if (!(vs_brs.mean > 3.0 * vs_brs.se)) {
                ok = false;
                where += " BRS@" + fmt(pt.snr_db) + "dB";
            }
            if (pt.snr_db >= 20.0) {
                const Paired vs_af = paired(pt.rates[ps_df], pt.rates[ps_af]);
                worst_af = std::min(worst_af, vs_af.mean / vs_af.se);
                if (!(vs_af.mean > 3.0 * vs_af.se)) {
                    ok = false;
                    where += " AF@" + fmt(pt.snr_db) + "dB";
                }
            }
        }
        std::string detail = "min margin/SE: vs PS-AF " + fmt(worst_af) + ", vs BRS-DF " + fmt(worst_brs) +
                             "; sweep " + fmt(sweep_secs) + " s";
        if (!where.empty())
            detail += "; failing:" + where;
        return Outcome{ok, detail};
    });

    report(8, "Fig. 3 trend: TS ahead at low SNR, PS ahead at a higher SNR (> 3 paired SE)", [&] {
        if (!sweep_error.empty())
            return Outcome{false, sweep_error};
        std::string detail;
        bool any = false;
        for (auto [ps, ts] : {std::pair{Scheme::PS_DF, Scheme::TS_DF}, std::pair{Scheme::PS_AF, Scheme::TS_AF}}) {
            const std::size_t ips = index_of(cfg, ps), its = index_of(cfg, ts);
            double ts_ahead_at = NAN, ps_ahead_at = NAN;
            for (const PointSamples &pt : samples) {
                const Paired d = paired(pt.rates[ips], pt.rates[its]);
                if (std::isnan(ts_ahead_at) && -d.mean > 3.0 * d.se)
                    ts_ahead_at = pt.snr_db;
                if (!std::isnan(ts_ahead_at) && pt.snr_db > ts_ahead_at && d.mean > 3.0 * d.se) {
                    ps_ahead_at = pt.snr_db;
                    break;
                }
            }
            const bool ok = !std::isnan(ts_ahead_at) && !std::isnan(ps_ahead_at);
            any = any || ok;
            detail += std::string(label(ps).substr(3)) + ": TS ahead at " + fmt(ts_ahead_at) + " dB, PS ahead at " +
                      fmt(ps_ahead_at) + " dB; ";
        }
        return Outcome{any, detail};
    });

    report(9, "sweep CSV byte-identical across runs and thread counts", [] {
        SweepConfig c = paper_config();
        c.trials = 1000;
        auto csv = [](const SweepConfig &x) {
            std::ostringstream os;
            emit_csv(run_sweep(x), os);
            return os.str();
        };
        c.threads = 1;
        const std::string a = csv(c);
        const std::string b = csv(c);
        c.threads = 4;
        const std::string d = csv(c);
        c.threads = 7;
        const std::string e = csv(c);
        const bool ok = a == b && a == d && a == e;
        return Outcome{ok, std::to_string(a.size()) + " bytes, threads 1/1/4/7 " + (ok ? "identical" : "differ")};
    });

    report(10, "mean h at distance 5, theta 3 within 3 sigma of 0.008 (1e5 draws)", [] {
        constexpr std::size_t n = 100000;
        Topology topo;
        topo.relays = {{5.0, 0.0}};
        double sum = 0.0;
        for (std::size_t t = 0; t < n; ++t)
            sum += draw_channels(topo, rng::derive_seed(kSeed, {t})).h[0];
        const double mean = sum / static_cast<double>(n);
        const double sigma = 0.008 / std::sqrt(static_cast<double>(n));
        const double z = (mean - 0.008) / sigma;
        return Outcome{std::abs(z) <= 3.0, "mean " + fmt(mean) + ", z = " + fmt(z)};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

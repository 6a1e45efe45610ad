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

#include "swipt/baselines.hpp"

#include "swipt/af_solver.hpp"
#include "swipt/df_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swipt {

std::string_view to_string(Protocol p)
{
    return p == Protocol::DF ? "DF" : "AF";
}

BrsSolution solve_brs(const SystemParams &params, const ChannelRealization &ch, Protocol protocol)
{
    validate(params);
    validate(ch);
    BrsSolution best;
    for (std::size_t k = 0; k < ch.relay_count(); ++k) {
        const ChannelRealization one = ch.single(k);
        const PowerSplitSolution s = protocol == Protocol::DF ? solve_df(params, one) : solve_af(params, one);
        if (k == 0 || s.rate > best.rate)
            best = BrsSolution{k, s.alpha.front(), s.rate};
    }
    return best;
}

namespace {

double ts_rate_unchecked(const SystemParams &params, const ChannelRealization &ch, Protocol protocol, double t)
{
    const double p = params.source_power;
    const double boost = 2.0 * params.zeta * p * t / (1.0 - t);
    double snr = 0.0;
    if (protocol == Protocol::DF) {
        double first = p * ch.h[0];
        double second = 0.0;
        for (std::size_t i = 0; i < ch.relay_count(); ++i) {
            first = std::min(first, p * ch.h[i]);
            second += boost * ch.h[i] * ch.g[i];
        }
        snr = std::min(first, second);
    } else {
        for (std::size_t i = 0; i < ch.relay_count(); ++i) {
            const double relay_power = boost * ch.h[i];
            snr += p * ch.h[i] * relay_power * ch.g[i] / (1.0 + p * ch.h[i] + relay_power * ch.g[i]);
        }
    }
    return 0.5 * (1.0 - t) * std::log2(1.0 + snr);
}

} // namespace

double ts_rate(const SystemParams &params, const ChannelRealization &ch, Protocol protocol, double t)
{
    validate(params);
    validate(ch);
    if (!(t >= 0.0 && t < 1.0))
        throw std::invalid_argument("time-switching fraction must lie in [0,1)");
    return ts_rate_unchecked(params, ch, protocol, t);
}

TimeSwitchSolution solve_ts(const SystemParams &params, const ChannelRealization &ch, Protocol protocol,
                            double grid_step)
{
    validate(params);
    validate(ch);
    if (!(grid_step > 0.0 && grid_step <= 0.01))
        throw std::invalid_argument("time-switching grid step must lie in (0, 0.01]");

    TimeSwitchSolution best;
    for (std::size_t i = 0;; ++i) {
        const double t = static_cast<double>(i) * grid_step;
        if (t >= 1.0)
            break;
        const double r = ts_rate_unchecked(params, ch, protocol, t);
        if (r > best.rate)
            best = TimeSwitchSolution{t, r};
    }
    return best;
}

} // namespace swipt

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

#include "swipt/df_solver.hpp"

#include "swipt/error.hpp"

#include <algorithm>
#include <string>

namespace swipt {

double snr_df_first(const SystemParams &params, const ChannelRealization &ch, std::span<const double> alpha)
{
    validate(params);
    detail::check_alpha(ch, alpha);
    double worst = params.source_power * ch.h[0] * alpha[0];
    for (std::size_t i = 1; i < alpha.size(); ++i)
        worst = std::min(worst, params.source_power * ch.h[i] * alpha[i]);
    return worst;
}

double snr_df_second(const SystemParams &params, const ChannelRealization &ch, std::span<const double> alpha)
{
    validate(params);
    detail::check_alpha(ch, alpha);
    double sum = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        sum += params.zeta * params.source_power * ch.h[i] * (1.0 - alpha[i]) * ch.g[i];
    return sum;
}

RateReport rate_df(const SystemParams &params, const ChannelRealization &ch, std::span<const double> alpha)
{
    RateReport r;
    r.snr_first_hop = snr_df_first(params, ch, alpha);
    r.snr_second_hop = snr_df_second(params, ch, alpha);
    r.rate = half_duplex_rate(std::min(r.snr_first_hop, r.snr_second_hop));
    return r;
}

PowerSplitSolution solve_df(const SystemParams &params, const ChannelRealization &ch)
{
    validate(params);
    validate(ch);
    const std::size_t k = ch.relay_count();
    for (std::size_t i = 0; i < k; ++i)
        if (ch.h[i] == 0.0)
            throw DegenerateChannel("relay " + std::to_string(i) +
                                    " has zero source gain; every DF relay must decode, so the rate is 0");

    double sum_hg = 0.0;
    double sum_g = 0.0;
    double min_h = ch.h[0];
    for (std::size_t i = 0; i < k; ++i) {
        sum_hg += params.zeta * ch.h[i] * ch.g[i];
        sum_g += params.zeta * ch.g[i];
        min_h = std::min(min_h, ch.h[i]);
    }
    // Per-unit-power decoding SNR; the min clips at the weakest relay, which
    // then decodes with everything (alpha = 1).
    const double level = std::min(sum_hg / (1.0 + sum_g), min_h);

    PowerSplitSolution sol;
    sol.alpha.resize(k);
    for (std::size_t i = 0; i < k; ++i)
        sol.alpha[i] = std::min(level / ch.h[i], 1.0);
    sol.snr_eff = params.source_power * level;

    const RateReport r = rate_df(params, ch, sol.alpha);
    sol.rate = r.rate;
    sol.snr_first_hop = r.snr_first_hop;
    sol.snr_second_hop = r.snr_second_hop;
    return sol;
}

} // namespace swipt

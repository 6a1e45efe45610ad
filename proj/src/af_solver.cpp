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

#include "swipt/af_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swipt {

AfSubproblem AfSubproblem::from_channel(const SystemParams &params, double h, double g)
{
    AfSubproblem s;
    s.b = params.source_power * h;
    s.c = params.zeta * params.source_power * h * g;
    s.gain_scale = params.zeta * params.source_power * params.source_power * h * h * g;
    s.A = 1.0 + s.c;
    s.B = s.b - s.c;
    return s;
}

AfSubproblem AfSubproblem::from_coefficients(double b, double c)
{
    AfSubproblem s;
    s.b = b;
    s.c = c;
    s.gain_scale = b * c;
    s.A = 1.0 + c;
    s.B = b - c;
    return s;
}

double AfSubproblem::objective(double alpha) const
{
    return gain_scale * alpha * (1.0 - alpha) / (A + B * alpha);
}

AfSingleResult solve_af_single(const AfSubproblem &sub)
{
    if (!std::isfinite(sub.b) || !std::isfinite(sub.c) || !std::isfinite(sub.gain_scale) || !std::isfinite(sub.A) ||
        !std::isfinite(sub.B))
        throw std::invalid_argument("AF subproblem has non-finite coefficients");
    if (sub.b < 0.0 || sub.c < 0.0 || sub.gain_scale < 0.0)
        throw std::invalid_argument("AF subproblem coefficients must be nonnegative");

    AfSingleResult r;
    if (sub.gain_scale == 0.0)
        return r;

    // A + B = 1 + b > 0, so the root is real and lies strictly inside (0,1).
    double alpha = sub.A / (sub.A + std::sqrt(sub.A * (sub.A + sub.B)));
    if (!(alpha > 0.0 && alpha < 1.0)) {
        alpha = std::clamp(alpha, 0.0, 1.0);
        r.clamped = true;
    }
    r.alpha = alpha;
    r.objective = sub.objective(alpha);
    return r;
}

double af_relay_snr(const SystemParams &params, double h, double g, double alpha)
{
    const double p = params.source_power;
    return params.zeta * p * p * h * h * alpha * (1.0 - alpha) * g /
           (1.0 + p * h * alpha + params.zeta * p * h * (1.0 - alpha) * g);
}

RateReport rate_af(const SystemParams &params, const ChannelRealization &ch, std::span<const double> alpha)
{
    validate(params);
    detail::check_alpha(ch, alpha);
    double snr = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        snr += af_relay_snr(params, ch.h[i], ch.g[i], alpha[i]);
    return RateReport{half_duplex_rate(snr), snr, snr};
}

PowerSplitSolution solve_af(const SystemParams &params, const ChannelRealization &ch)
{
    validate(params);
    validate(ch);
    PowerSplitSolution sol;
    sol.alpha.reserve(ch.relay_count());
    for (std::size_t i = 0; i < ch.relay_count(); ++i) {
        const AfSingleResult r = solve_af_single(AfSubproblem::from_channel(params, ch.h[i], ch.g[i]));
        sol.alpha.push_back(r.alpha);
        sol.clamped += r.clamped ? 1 : 0;
    }
    const RateReport r = rate_af(params, ch, sol.alpha);
    sol.rate = r.rate;
    sol.snr_first_hop = r.snr_first_hop;
    sol.snr_second_hop = r.snr_second_hop;
    return sol;
}

} // namespace swipt

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

#ifndef SWIPT_DF_SOLVER_HPP
#define SWIPT_DF_SOLVER_HPP

#include "swipt/model.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace swipt {

/// Optimised power-splitting ratios of one relay set. alpha[i] is the
/// fraction of relay i's received power sent to the information decoder.
struct PowerSplitSolution
{
    std::vector<double> alpha;
    double rate = 0.0;
    double snr_first_hop = 0.0;
    double snr_second_hop = 0.0;
    std::optional<double> snr_eff; ///< common decoding SNR, DF only
    std::size_t clamped = 0;       ///< AF roots pulled back into [0,1]
};

/// Worst decoding SNR over the relays: min_i P h_i alpha_i.
double snr_df_first(const SystemParams &params, const ChannelRealization &ch, std::span<const double> alpha);

/// Coherent second-hop SNR at the destination when every relay forwards with
/// its harvested power: sum_i zeta P h_i (1 - alpha_i) g_i.
double snr_df_second(const SystemParams &params, const ChannelRealization &ch, std::span<const double> alpha);

RateReport rate_df(const SystemParams &params, const ChannelRealization &ch, std::span<const double> alpha);

/// Closed-form DF optimum. All relays are driven to the common decoding SNR
///
///   snr_eff = P * min( sum_j zeta h_j g_j / (1 + sum_j zeta g_j), min_j h_j )
///
/// and alpha_i = snr_eff / (P h_i). The ratios are computed from the P-free
/// form, so they do not depend on the source power bit for bit.
///
/// Throws DegenerateChannel if some h_i == 0 (that relay can never decode).
PowerSplitSolution solve_df(const SystemParams &params, const ChannelRealization &ch);

} // namespace swipt

#endif

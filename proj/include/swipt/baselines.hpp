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

#ifndef SWIPT_BASELINES_HPP
#define SWIPT_BASELINES_HPP

#include "swipt/model.hpp"

#include <cstddef>
#include <string_view>

namespace swipt {

enum class Protocol
{
    DF,
    AF
};

std::string_view to_string(Protocol p);

/// Best single relay. chosen_relay is zero-based; ties go to the lowest index.
struct BrsSolution
{
    std::size_t chosen_relay = 0;
    double alpha = 0.0;
    double rate = 0.0;
};

BrsSolution solve_brs(const SystemParams &params, const ChannelRealization &ch, Protocol protocol);

struct TimeSwitchSolution
{
    double t = 0.0; ///< harvesting fraction of the frame, in [0,1)
    double rate = 0.0;
};

inline constexpr double kDefaultTsGridStep = 1e-3;

/// Rate of the time-switching relay scheme at harvesting fraction t.
///
/// Fraction t of the frame harvests at every relay, giving relay power
/// P_i = 2 zeta P h_i t / (1 - t) over the forwarding slot. The remaining
/// 1 - t is split equally between S->R and R->D with full-power reception:
///
///   DF: (1-t)/2 log2(1 + min(min_i P h_i, sum_i P_i g_i))
///   AF: (1-t)/2 log2(1 + sum_i P h_i P_i g_i / (1 + P h_i + P_i g_i))
double ts_rate(const SystemParams &params, const ChannelRealization &ch, Protocol protocol, double t);

/// Exhaustive search of ts_rate over t = 0, step, 2 step, ... < 1.
/// Requires 0 < grid_step <= 0.01.
TimeSwitchSolution solve_ts(const SystemParams &params, const ChannelRealization &ch, Protocol protocol,
                            double grid_step = kDefaultTsGridStep);

} // namespace swipt

#endif

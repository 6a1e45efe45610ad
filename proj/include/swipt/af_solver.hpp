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

#ifndef SWIPT_AF_SOLVER_HPP
#define SWIPT_AF_SOLVER_HPP

#include "swipt/df_solver.hpp"
#include "swipt/model.hpp"

#include <span>

namespace swipt {

/// Per-relay AF subproblem
///
///   maximise  gain_scale * a (1 - a) / (A + B a)   over a in [0,1]
///
/// with b = P h, c = zeta P h g, gain_scale = zeta P^2 h^2 g, A = 1 + c and
/// B = b - c. The numerator is concave and the denominator affine and
/// positive, so the ratio is strictly quasi-concave when gain_scale > 0.
struct AfSubproblem
{
    double b = 0.0;
    double c = 0.0;
    double gain_scale = 0.0;
    double A = 1.0;
    double B = 0.0;

    static AfSubproblem from_channel(const SystemParams &params, double h, double g);
    /// Builds the subproblem from b and c alone (gain_scale = b c).
    static AfSubproblem from_coefficients(double b, double c);

    double objective(double alpha) const;
};

struct AfSingleResult
{
    double alpha = 0.0;
    double objective = 0.0;
    bool clamped = false;
};

/// Stationary point of the ratio: root of B a^2 + 2 A a - A = 0 in (0,1),
/// returned as A / (A + sqrt(A (A + B))). Returns alpha = 0 when
/// gain_scale == 0 (the relay has nothing to forward, so it harvests all).
AfSingleResult solve_af_single(const AfSubproblem &sub);

/// Per-relay contribution zeta P^2 h^2 a (1-a) g / (1 + P h a + zeta P h (1-a) g).
double af_relay_snr(const SystemParams &params, double h, double g, double alpha);

RateReport rate_af(const SystemParams &params, const ChannelRealization &ch, std::span<const double> alpha);

/// Solves every relay's subproblem independently; the sum of maximised
/// nonnegative terms maximises the end-to-end AF rate.
PowerSplitSolution solve_af(const SystemParams &params, const ChannelRealization &ch);

} // namespace swipt

#endif

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

#include "swipt/model.hpp"

#include "swipt/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace swipt {

void validate(const SystemParams &params)
{
    if (!(params.source_power > 0.0) || !std::isfinite(params.source_power))
        throw std::invalid_argument("source power must be finite and > 0");
    if (!(params.zeta >= 0.0 && params.zeta <= 1.0))
        throw std::invalid_argument("zeta must lie in [0,1]");
}

double distance(Point2 a, Point2 b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

static bool finite(Point2 p)
{
    return std::isfinite(p.x) && std::isfinite(p.y);
}

void validate(const Topology &topo)
{
    if (topo.relays.empty())
        throw std::invalid_argument("topology needs at least one relay");
    // theta == 0 disables path loss.
    if (!(topo.theta >= 0.0) || !std::isfinite(topo.theta))
        throw std::invalid_argument("path-loss exponent must be finite and >= 0");
    if (!finite(topo.source) || !finite(topo.destination))
        throw std::invalid_argument("non-finite source/destination coordinates");
    for (const auto &r : topo.relays)
        if (!finite(r))
            throw std::invalid_argument("non-finite relay coordinates");
}

ChannelRealization ChannelRealization::single(std::size_t k) const
{
    if (k >= h.size() || k >= g.size())
        throw std::out_of_range("relay index out of range");
    return ChannelRealization{{h[k]}, {g[k]}};
}

void validate(const ChannelRealization &ch)
{
    if (ch.h.empty())
        throw std::invalid_argument("channel realization has no relays");
    if (ch.h.size() != ch.g.size())
        throw std::invalid_argument("h and g differ in length (" + std::to_string(ch.h.size()) + " vs " +
                                    std::to_string(ch.g.size()) + ")");
    for (std::size_t i = 0; i < ch.h.size(); ++i)
        if (!(ch.h[i] >= 0.0) || !(ch.g[i] >= 0.0) || !std::isfinite(ch.h[i]) || !std::isfinite(ch.g[i]))
            throw std::invalid_argument("gains must be finite and nonnegative (relay " + std::to_string(i) + ")");
}

void detail::check_alpha(const ChannelRealization &ch, std::span<const double> alpha)
{
    validate(ch);
    if (alpha.size() != ch.relay_count())
        throw std::invalid_argument("alpha has " + std::to_string(alpha.size()) + " entries for " +
                                    std::to_string(ch.relay_count()) + " relays");
    for (double a : alpha)
        if (!(a >= 0.0 && a <= 1.0))
            throw std::invalid_argument("power-splitting ratio outside [0,1]");
}

double half_duplex_rate(double snr)
{
    return 0.5 * std::log2(1.0 + snr);
}

Topology gen_topology(std::uint64_t seed, std::size_t k, const Geometry &geo)
{
    if (k == 0)
        throw std::invalid_argument("relay count must be >= 1");
    if (!(geo.square_side >= 0.0) || !std::isfinite(geo.square_side))
        throw std::invalid_argument("square side must be finite and >= 0");

    Topology topo;
    topo.source = geo.source;
    topo.destination = geo.destination;
    topo.theta = geo.theta;
    topo.relays.reserve(k);

    rng::Engine eng(rng::derive_seed(seed, {k}));
    for (std::size_t i = 0; i < k; ++i) {
        const double ux = rng::uniform01(eng);
        const double uy = rng::uniform01(eng);
        topo.relays.push_back({geo.square_center.x + (ux - 0.5) * geo.square_side,
                               geo.square_center.y + (uy - 0.5) * geo.square_side});
    }
    validate(topo);
    return topo;
}

namespace {

double path_gain(Point2 a, Point2 b, double theta)
{
    const double d = distance(a, b);
    if (!(d > 0.0))
        throw std::invalid_argument("relay coincides with an end point; path loss is singular at zero distance");
    return std::pow(d, -theta);
}

} // namespace

ChannelRealization mean_gains(const Topology &topo)
{
    validate(topo);
    ChannelRealization ch;
    ch.h.reserve(topo.relay_count());
    ch.g.reserve(topo.relay_count());
    for (const auto &r : topo.relays) {
        ch.h.push_back(path_gain(topo.source, r, topo.theta));
        ch.g.push_back(path_gain(r, topo.destination, topo.theta));
    }
    return ch;
}

ChannelRealization draw_channels(const Topology &topo, std::uint64_t trial_seed)
{
    ChannelRealization ch = mean_gains(topo);
    // Link 2i is S->R_i, link 2i+1 is R_i->D.
    for (std::size_t i = 0; i < ch.h.size(); ++i) {
        rng::Engine sr(rng::derive_seed(trial_seed, {2 * i}));
        rng::Engine rd(rng::derive_seed(trial_seed, {2 * i + 1}));
        ch.h[i] *= rng::exponential(sr);
        ch.g[i] *= rng::exponential(rd);
    }
    return ch;
}

} // namespace swipt

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

#ifndef SWIPT_MODEL_HPP
#define SWIPT_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace swipt {

/// Transmit power and harvester efficiency. Noise power is 1 at every
/// receiver, so source_power is numerically the transmit SNR.
struct SystemParams
{
    double source_power = 1.0;
    double zeta = 0.6;
};

/// Throws std::invalid_argument unless P > 0 and 0 <= zeta <= 1.
void validate(const SystemParams &params);

struct Point2
{
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2 &, const Point2 &) = default;
};

double distance(Point2 a, Point2 b);

struct Topology
{
    Point2 source{0.0, 0.0};
    Point2 destination{10.0, 0.0};
    std::vector<Point2> relays;
    double theta = 3.0; ///< path-loss exponent

    std::size_t relay_count() const noexcept { return relays.size(); }
};

void validate(const Topology &topo);

/// Placement of the relay square and the end points. Defaults reproduce the
/// reference geometry: S=(0,0), D=(10,0), 2 m square centred at (5,0), theta=3.
struct Geometry
{
    Point2 source{0.0, 0.0};
    Point2 destination{10.0, 0.0};
    Point2 square_center{5.0, 0.0};
    double square_side = 2.0;
    double theta = 3.0;
};

/// Power gains of one fading drop: h (source->relay) and g (relay->destination).
struct ChannelRealization
{
    std::vector<double> h;
    std::vector<double> g;

    std::size_t relay_count() const noexcept { return h.size(); }

    /// The single-relay channel made of relay k only.
    ChannelRealization single(std::size_t k) const;
};

/// Throws std::invalid_argument on a size mismatch, an empty relay set, or a
/// negative or non-finite gain.
void validate(const ChannelRealization &ch);

/// End-to-end rate in bits/s/Hz together with the per-hop SNRs it was
/// computed from. AF reports carry the single end-to-end SNR in both fields.
struct RateReport
{
    double rate = 0.0;
    double snr_first_hop = 0.0;
    double snr_second_hop = 0.0;
};

/// Half-duplex two-slot rate: 0.5 * log2(1 + snr).
double half_duplex_rate(double snr);

/// Draws k relay positions i.i.d. uniform over the axis-aligned square of
/// `geo`. Deterministic in (seed, k).
Topology gen_topology(std::uint64_t seed, std::size_t k, const Geometry &geo = {});

/// One fading drop: gain = c * L^-theta with c unit-mean exponential (the
/// squared envelope of unit-variance Rayleigh fading) and L the Euclidean
/// link length. Each link uses its own stream keyed on (trial_seed, link).
/// Throws std::invalid_argument if any relay coincides with S or D.
ChannelRealization draw_channels(const Topology &topo, std::uint64_t trial_seed);

/// Mean gain L^-theta of every S->R (h) and R->D (g) link.
ChannelRealization mean_gains(const Topology &topo);

namespace detail {
void check_alpha(const ChannelRealization &ch, std::span<const double> alpha);
}

} // namespace swipt

#endif

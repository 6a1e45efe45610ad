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

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace swipt;

TEST_CASE("gen_topology places relays inside the square")
{
    const Topology topo = gen_topology(17, 5, Geometry{});
    REQUIRE(topo.relay_count() == 5);
    for (const Point2 &r : topo.relays) {
        CHECK(std::abs(r.x - 5.0) <= 1.0);
        CHECK(std::abs(r.y) <= 1.0);
    }
    CHECK(topo.source == Point2{0.0, 0.0});
    CHECK(topo.destination == Point2{10.0, 0.0});
    CHECK(topo.theta == 3.0);
}

TEST_CASE("gen_topology with a zero-side square puts every relay at the centre")
{
    Geometry geo;
    geo.square_side = 0.0;
    for (const Point2 &r : gen_topology(3, 4, geo).relays)
        CHECK(r == geo.square_center);
}

TEST_CASE("gen_topology is deterministic and seed dependent")
{
    CHECK(gen_topology(99, 5).relays == gen_topology(99, 5).relays);
    CHECK(gen_topology(99, 5).relays != gen_topology(100, 5).relays);
    CHECK_THROWS_AS(gen_topology(1, 0), std::invalid_argument);
    Geometry bad;
    bad.square_side = -1.0;
    CHECK_THROWS_AS(gen_topology(1, 2, bad), std::invalid_argument);
}

TEST_CASE("draw_channels is bit-reproducible per trial seed")
{
    const Topology topo = gen_topology(5, 5);
    const ChannelRealization a = draw_channels(topo, 1234);
    const ChannelRealization b = draw_channels(topo, 1234);
    CHECK(a.h == b.h);
    CHECK(a.g == b.g);
    CHECK(draw_channels(topo, 1235).h != a.h);
}

TEST_CASE("link streams are keyed per link")
{
    // Adding a relay leaves the fading of the existing links untouched.
    Topology small;
    small.relays = {{5.0, 0.5}, {4.5, -0.5}};
    Topology large = small;
    large.relays.push_back({5.5, 0.0});
    const ChannelRealization a = draw_channels(small, 77);
    const ChannelRealization b = draw_channels(large, 77);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(a.h[i] == b.h[i]);
        CHECK(a.g[i] == b.g[i]);
    }
}

TEST_CASE("draw_channels refuses a relay on top of an end point")
{
    Topology topo;
    topo.relays = {{0.0, 0.0}};
    CHECK_THROWS_AS(draw_channels(topo, 1), std::invalid_argument);
    topo.relays = {{10.0, 0.0}};
    CHECK_THROWS_AS(draw_channels(topo, 1), std::invalid_argument);
}

TEST_CASE("mean fading gain matches path loss")
{
    // Unit-mean exponential fading has unit variance, so the sample mean of N
    // draws has standard error L^-theta / sqrt(N).
    constexpr std::size_t n = 100000;
    Topology topo;
    topo.relays = {{5.0, 0.0}};

    SUBCASE("theta = 3 at distance 5")
    {
        double sum = 0.0;
        for (std::size_t t = 0; t < n; ++t)
            sum += draw_channels(topo, rng::derive_seed(2024, {t})).h[0];
        const double mean = sum / n;
        const double sigma = 0.008 / std::sqrt(static_cast<double>(n));
        CHECK(std::abs(mean - 0.008) <= 3.0 * sigma);
    }
    SUBCASE("theta = 0 disables path loss")
    {
        topo.theta = 0.0;
        double sum = 0.0;
        for (std::size_t t = 0; t < n; ++t)
            sum += draw_channels(topo, rng::derive_seed(2025, {t})).h[0];
        CHECK(std::abs(sum / n - 1.0) <= 3.0 / std::sqrt(static_cast<double>(n)));
    }
}

TEST_CASE("generated gains are strictly positive")
{
    const Topology topo = gen_topology(8, 5);
    for (std::uint64_t t = 0; t < 2000; ++t) {
        const ChannelRealization ch = draw_channels(topo, t);
        for (std::size_t i = 0; i < ch.relay_count(); ++i) {
            REQUIRE(ch.h[i] > 0.0);
            REQUIRE(ch.g[i] > 0.0);
        }
    }
}

TEST_CASE("uniform mappings stay inside their intervals")
{
    rng::Engine eng(3);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng::uniform01(eng);
        const double v = rng::uniform_open01(eng);
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        REQUIRE(v > 0.0);
        REQUIRE(v < 1.0);
    }
}

TEST_CASE("channel and parameter validation")
{
    CHECK_THROWS_AS(validate(ChannelRealization{{1.0, 2.0}, {1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(ChannelRealization{{}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(ChannelRealization{{-1.0}, {1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(ChannelRealization{{1.0}, {NAN}}), std::invalid_argument);
    CHECK_NOTHROW(validate(ChannelRealization{{0.0}, {0.0}}));

    CHECK_THROWS_AS(validate(SystemParams{0.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SystemParams{1.0, 1.5}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SystemParams{1.0, -0.1}), std::invalid_argument);
    CHECK_NOTHROW(validate(SystemParams{1.0, 0.0}));

    Topology topo;
    CHECK_THROWS_AS(validate(topo), std::invalid_argument);
    topo.relays = {{1.0, 1.0}};
    topo.theta = -1.0;
    CHECK_THROWS_AS(validate(topo), std::invalid_argument);
}

TEST_CASE("half_duplex_rate")
{
    CHECK(half_duplex_rate(0.0) == 0.0);
    CHECK(half_duplex_rate(1.0) == doctest::Approx(0.5));
    CHECK(half_duplex_rate(3.0) == doctest::Approx(1.0));
}

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
#include "swipt/baselines.hpp"
#include "swipt/df_solver.hpp"
#include "swipt/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace swipt;

TEST_CASE("BRS with a single relay is the multi-relay solver")
{
    const SystemParams p{20.0, 0.6};
    const ChannelRealization ch{{0.4}, {1.3}};
    const BrsSolution df = solve_brs(p, ch, Protocol::DF);
    CHECK(df.chosen_relay == 0);
    CHECK(df.rate == solve_df(p, ch).rate);
    CHECK(df.alpha == solve_df(p, ch).alpha[0]);
    const BrsSolution af = solve_brs(p, ch, Protocol::AF);
    CHECK(af.rate == solve_af(p, ch).rate);
    CHECK(af.alpha == solve_af(p, ch).alpha[0]);
}

TEST_CASE("BRS picks the best single relay")
{
    const SystemParams unit{1.0, 1.0};
    const BrsSolution s = solve_brs(unit, ChannelRealization{{1.0, 10.0}, {1.0, 1.0}}, Protocol::DF);
    CHECK(s.chosen_relay == 1);
    CHECK(s.alpha == doctest::Approx(0.5));
    CHECK(s.rate == doctest::Approx(1.29248125036058));
    // Here the lone strong relay beats the cooperative DF rate of 0.5.
    CHECK(s.rate > solve_df(unit, ChannelRealization{{1.0, 10.0}, {1.0, 1.0}}).rate);
}

TEST_CASE("BRS ties go to the lowest index")
{
    const SystemParams p{10.0, 0.6};
    const ChannelRealization same{{0.7, 0.7, 0.7}, {1.2, 1.2, 1.2}};
    CHECK(solve_brs(p, same, Protocol::AF).chosen_relay == 0);
    CHECK(solve_brs(p, same, Protocol::DF).chosen_relay == 0);
}

TEST_CASE("BRS is the argmax of per-relay enumeration; AF cooperation dominates it")
{
    rng::Engine eng(21);
    for (int n = 0; n < 300; ++n) {
        const oracle::Instance in = oracle::random_instance(eng, 1 + static_cast<std::size_t>(n % 5));
        for (Protocol proto : {Protocol::DF, Protocol::AF}) {
            const BrsSolution brs = solve_brs(in.params, in.ch, proto);
            std::size_t arg = 0;
            double best = -1.0;
            for (std::size_t k = 0; k < in.ch.relay_count(); ++k) {
                const ChannelRealization one = in.ch.single(k);
                const double r = proto == Protocol::DF ? solve_df(in.params, one).rate : solve_af(in.params, one).rate;
                if (r > best) {
                    best = r;
                    arg = k;
                }
            }
            REQUIRE(brs.chosen_relay == arg);
            REQUIRE(brs.rate == best);
        }
        REQUIRE(solve_af(in.params, in.ch).rate >= solve_brs(in.params, in.ch, Protocol::AF).rate);
    }
}

TEST_CASE("time-switching rate at the ends of the frame")
{
    const SystemParams p{10.0, 0.6};
    const ChannelRealization ch{{0.5, 1.5}, {2.0, 0.3}};
    for (Protocol proto : {Protocol::DF, Protocol::AF}) {
        CHECK(ts_rate(p, ch, proto, 0.0) == 0.0);
        CHECK(ts_rate(p, ch, proto, 1.0 - 1e-9) < 1e-6);
        CHECK_THROWS_AS(ts_rate(p, ch, proto, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(ts_rate(p, ch, proto, -0.1), std::invalid_argument);
    }
}

TEST_CASE("time-switching closed-form check")
{
    // DF, one relay: rate(t) = (1-t)/2 log2(1 + min(P h, 2 zeta P h g t / (1-t))).
    const SystemParams p{10.0, 0.6};
    const ChannelRealization ch{{1.0}, {1.0}};
    for (double t : {0.1, 0.25, 0.4, 0.5, 0.8}) {
        const double expected = 0.5 * (1.0 - t) * std::log2(1.0 + std::min(10.0, 12.0 * t / (1.0 - t)));
        CHECK(ts_rate(p, ch, Protocol::DF, t) == doctest::Approx(expected).epsilon(1e-14));
        const double pr = 12.0 * t / (1.0 - t);
        const double af = 0.5 * (1.0 - t) * std::log2(1.0 + 10.0 * pr / (1.0 + 10.0 + pr));
        CHECK(ts_rate(p, ch, Protocol::AF, t) == doctest::Approx(af).epsilon(1e-14));
    }

    // Reference from a 1e-6 scan of the same expression: t* = 0.403048, rate 0.951005.
    const TimeSwitchSolution s = solve_ts(p, ch, Protocol::DF, 1e-3);
    CHECK(std::abs(s.t - 0.40) <= 0.01);
    CHECK(std::abs(s.rate - 0.951) <= 0.002);
    CHECK(s.rate == doctest::Approx(0.951004943806346).epsilon(1e-12));
}

TEST_CASE("time-switching grid validation")
{
    const SystemParams p{10.0, 0.6};
    const ChannelRealization ch{{1.0}, {1.0}};
    CHECK_THROWS_AS(solve_ts(p, ch, Protocol::DF, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_ts(p, ch, Protocol::DF, 0.02), std::invalid_argument);
    CHECK_NOTHROW(solve_ts(p, ch, Protocol::AF, 0.01));
}

TEST_CASE("time-switching grid refinement")
{
    rng::Engine eng(22);
    for (int n = 0; n < 40; ++n) {
        const oracle::Instance in = oracle::random_instance(eng, 1 + static_cast<std::size_t>(n % 4));
        for (Protocol proto : {Protocol::DF, Protocol::AF}) {
            const TimeSwitchSolution coarse = solve_ts(in.params, in.ch, proto, 1e-3);
            const TimeSwitchSolution fine = solve_ts(in.params, in.ch, proto, 1e-4);
            REQUIRE(coarse.t >= 0.0);
            REQUIRE(coarse.t < 1.0);
            REQUIRE(std::abs(coarse.t - fine.t) <= 1e-3 + 1e-12);
            REQUIRE(fine.rate - coarse.rate <= 1e-3);
            REQUIRE(fine.rate >= coarse.rate - 1e-12);
        }
    }
}

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

#ifndef SWIPT_SWEEP_HPP
#define SWIPT_SWEEP_HPP

#include "swipt/baselines.hpp"
#include "swipt/model.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swipt {

enum class Scheme
{
    PS_DF,
    PS_AF,
    BRS_DF,
    BRS_AF,
    TS_DF,
    TS_AF
};

/// "PS-DF", "BRS-AF", ...
std::string_view label(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view text);

/// Rate of one scheme on one realization.
double scheme_rate(Scheme s, const SystemParams &params, const ChannelRealization &ch,
                   double ts_grid_step = kDefaultTsGridStep);

/// Monte Carlo experiment description. Defaults reproduce the reference
/// study: K=5 relays in a 2 m square midway between S=(0,0) and D=(10,0),
/// theta=3, zeta=0.6, P from 0 to 40 dB in 5 dB steps.
struct SweepConfig
{
    std::uint64_t master_seed = 1;
    std::size_t trials = 10000;
    std::size_t k = 5;
    double zeta = 0.6;
    double snr_db_min = 0.0;
    double snr_db_max = 40.0;
    double snr_db_step = 5.0;
    std::vector<Scheme> schemes{Scheme::PS_DF, Scheme::PS_AF, Scheme::BRS_DF,
                                Scheme::BRS_AF, Scheme::TS_DF, Scheme::TS_AF};
    Geometry geometry;              ///< includes theta
    bool redraw_topology = true;    ///< fresh relay drop per trial
    double ts_grid_step = kDefaultTsGridStep;
    unsigned threads = 1;           ///< does not affect results
};

/// Every violated field, one message each; empty when the config is valid.
std::vector<std::string> config_errors(const SweepConfig &cfg);

/// Keys accepted by apply_setting, in documentation order.
const std::vector<std::string> &config_keys();

/// Sets one `key = value` pair. Throws std::invalid_argument for an unknown
/// key or an unparsable value.
void apply_setting(SweepConfig &cfg, std::string_view key, std::string_view value);

/// Reads `key = value` lines ('#' starts a comment) on top of `base`.
SweepConfig parse_config(std::istream &in, SweepConfig base = {});
/// Throws IoError if the file cannot be read.
SweepConfig load_config(const std::string &path, SweepConfig base = {});

std::vector<double> snr_points_db(const SweepConfig &cfg);

struct SweepRow
{
    double snr_db = 0.0;
    std::string scheme;
    double mean_rate = 0.0;
    double std_rate = 0.0; ///< sample standard deviation (n-1); 0 for one trial
    std::size_t trials = 0;
};

/// Supplies the realization of a trial. Used to inject fixed channels.
using ChannelSource = std::function<ChannelRealization(std::size_t trial)>;

/// Default source: relay drop and fading are keyed on (master_seed, trial)
/// only, so every SNR point and every scheme sees the same realization.
ChannelSource seeded_channels(const SweepConfig &cfg);

/// Per-trial rates at one SNR point; rates[s][t] for cfg.schemes[s], trial t.
struct PointSamples
{
    double snr_db = 0.0;
    std::vector<std::vector<double>> rates;
};

/// Evaluates every SNR point; channels are drawn once and shared across
/// points and schemes (paired comparison).
std::vector<PointSamples> simulate(const SweepConfig &cfg, const ChannelSource &source = {});

/// Mean and sample standard deviation in fixed trial order.
SweepRow summarize(double snr_db, Scheme scheme, const std::vector<double> &rates);

/// Throws std::invalid_argument listing every violated field.
std::vector<SweepRow> run_sweep(const SweepConfig &cfg, const ChannelSource &source = {});

/// printf("%.6g") equivalent that ignores the C and C++ locales.
std::string format_number(double v);

/// Header `snr_db,scheme,mean_rate,std_rate,trials`, rows sorted by
/// (snr_db, scheme label), '\n' line endings.
void emit_csv(std::vector<SweepRow> rows, std::ostream &out);
void emit_csv(std::vector<SweepRow> rows, const std::string &path);

std::vector<SweepRow> read_csv(std::istream &in);
std::vector<SweepRow> read_csv_file(const std::string &path);

/// Self-contained matplotlib script drawing mean_rate vs snr_db per scheme.
/// The data is embedded; the script takes an optional output image path.
void emit_plot_script(std::vector<SweepRow> rows, std::ostream &out);
void emit_plot_script(std::vector<SweepRow> rows, const std::string &path);

} // namespace swipt

#endif

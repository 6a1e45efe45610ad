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

#ifndef SWIPT_ORACLE_HPP
#define SWIPT_ORACLE_HPP

#include "swipt/af_solver.hpp"
#include "swipt/model.hpp"
#include "swipt/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Brute-force reference maximisers. These never call the solvers they check.

namespace swipt::oracle {

/// Grid lo, lo + step, ... over [lo, hi]; hi is always included.
struct GridSpec
{
    double step = 1e-3;
    double lo = 0.0;
    double hi = 1.0;
};

void validate(const GridSpec &spec);
std::vector<double> grid_points(const GridSpec &spec);

/// Joint grids larger than this are refused.
inline constexpr double kMaxJointEvaluations = 1e7;

struct GridResult
{
    std::vector<double> alpha;
    double rate = 0.0;
};

/// Exact maximiser of rate_df over the joint grid, K <= 3.
///
/// Every grid point is dominated by one built from a first-hop threshold s:
/// each alpha_i is lowered to the smallest grid value with P h_i alpha_i >= s,
/// which keeps the first hop at s and can only raise the second hop. The
/// search therefore enumerates the K * n thresholds s = P h_j v instead of
/// all n^K points. Ties keep the first threshold found.
GridResult grid_best_df(const SystemParams &params, const ChannelRealization &ch, const GridSpec &spec);

/// Literal n^K enumeration of rate_df; refuses more than kMaxJointEvaluations.
GridResult grid_best_df_exhaustive(const SystemParams &params, const ChannelRealization &ch, const GridSpec &spec);

struct GridScalarResult
{
    double alpha = 0.0;
    double objective = 0.0;
};

/// Scan of the 1-D AF ratio; the first maximising grid point wins.
GridScalarResult grid_best_af_single(const AfSubproblem &sub, const GridSpec &spec);

/// Joint enumeration of the full rate_af expression, K <= 2.
GridResult grid_best_af_joint(const SystemParams &params, const ChannelRealization &ch, const GridSpec &spec);

// ------------------------------------------------------------------------
// Oracle-equivalence suites, shared by `swiptsim verify` and the acceptance
// tests.

struct Instance
{
    SystemParams params;
    ChannelRealization ch;
};

/// Gains log-uniform in [1e-3, 10], P log-uniform in [0.1, 1000], zeta
/// uniform in [0.05, 1].
Instance random_instance(rng::Engine &eng, std::size_t k);

/// b and c log-uniform in [1e-3, 1e3].
AfSubproblem random_af_subproblem(rng::Engine &eng);

struct CheckResult
{
    std::string name;
    bool passed = true;
    std::size_t instances = 0;
    double worst = 0.0; ///< worst observed value of the checked quantity
    std::string detail;
};

/// rate(solve_df) >= grid_best_df - slack on `per_k` instances for each K in {1,2,3}.
CheckResult check_df_oracle(std::uint64_t seed, std::size_t per_k, double step = 1e-3, double slack = 1e-3);

/// Relative equalisation errors <= tol on the unclipped instances of check_df_oracle.
CheckResult check_df_equalization(std::uint64_t seed, std::size_t per_k, double tol = 1e-9);

/// solve_df alpha bit-identical for P and 100 P.
CheckResult check_df_power_invariance(std::uint64_t seed, std::size_t count);

/// |alpha - alpha_grid| <= alpha_tol and relative objective gap <= obj_tol.
CheckResult check_af_single_oracle(std::uint64_t seed, std::size_t count, double step = 1e-6,
                                   double alpha_tol = 2e-6, double obj_tol = 1e-9);

/// rate(solve_af) >= grid_best_af_joint - slack on random K = 2 instances.
CheckResult check_af_joint_oracle(std::uint64_t seed, std::size_t count, double step = 1e-3, double slack = 1e-3);

/// All five suites. The AF 1-D suite runs 10x `instances` subproblems.
std::vector<CheckResult> run_verification(std::uint64_t seed, std::size_t instances);

} // namespace swipt::oracle

#endif

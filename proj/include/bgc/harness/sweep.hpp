// Copyright 2026 The bgc-learn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Fidelity-versus-sample-size sweeps over random shallow circuits.
 *
 * Each trial draws a gate set and a placement, enumerates every gate
 * assignment on that placement, plants one of them as the target, collects
 * the largest number of snapshots once and evaluates the learner on every
 * prefix of that pool.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bgc/harness/config.hpp"

namespace bgc {

struct SweepRecord {
    int G = 0;
    int N = 0;
    int trial = 0;
    double fidelity = 0.0;

    bool operator==(const SweepRecord &) const = default;
};

struct SweepSummary {
    int G = 0;
    int N = 0;
    double mean_fidelity = 0.0;
    double median_fidelity = 0.0;
};

/// Smallest N at which the statistic reaches `threshold` and stays there for
/// every larger N in the sweep; empty when it never does.
struct SampleComplexity {
    int G = 0;
    double threshold = 0.0;
    std::optional<int> n_star_median;
    std::optional<int> n_star_mean;
};

struct SweepResult {
    /// Sorted by (G, N, trial).
    std::vector<SweepRecord> records;
    /// Sorted by (G, N).
    std::vector<SweepSummary> summaries;
    std::vector<SampleComplexity> curves;
};

/// Seed of one trial; independent of scheduling.
std::uint64_t trial_seed(const SweepConfig &cfg, int G, int trial);

/// Gate placement of one trial: G nearest-neighbour pairs.
Configuration sample_placement(const SweepConfig &cfg, int G, Rng &rng);

/// Fidelities of one trial at every N of cfg.N_range, in order.
std::vector<double> run_trial(const SweepConfig &cfg, int G, int trial);

SweepResult run_sweep(const SweepConfig &cfg);

/// Per-(G, N) statistics and the N* curves for the given thresholds.
void summarize(SweepResult &result, const std::vector<double> &thresholds);

} // namespace bgc

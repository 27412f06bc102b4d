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
 * Sweep configuration and its flat `key = value` file format.
 *
 * Lines starting with '#' are comments. Integer ranges are written `a..b`
 * (inclusive) or as comma lists; so are threshold lists.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bgc/learners.hpp"

namespace bgc {

enum class SweepCase {
    /// Nearest-neighbour gates on the first four qubits of the line.
    Concentrated,
    /// Nearest-neighbour gates anywhere on the line.
    RandomPlacement,
};

enum class SweepMode { State, UnitaryChoi, UnitaryNoAncilla };

const char *case_name(SweepCase c);
const char *mode_name(SweepMode m);

struct SweepConfig {
    SweepCase sweep_case = SweepCase::Concentrated;
    SweepMode mode = SweepMode::State;
    int n_total = 10000;
    std::vector<int> G_range{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<int> N_range;
    int trials = 1000;
    std::uint64_t gate_set_seed = 1;
    std::uint64_t trial_seed_base = 2;
    std::vector<double> fidelity_thresholds{0.999};
    std::size_t gate_set_size = 2;
    /// One gate set for every trial instead of one per trial.
    bool fixed_gate_set = false;
    int concentrated_qubits = 4;
    ShadowScheme scheme = ShadowScheme::Haar;
    int dense_limit = kDenseRotationLimit;
    /// Median-of-means batches used at every N (1 means a plain mean).
    std::size_t mom_batches = 1;
    /// Unset: the tournament in state mode, the overlap argmax otherwise.
    std::optional<SelectionRule> rule;
    /// Identification rounds before shadows; 0 uses the known placement.
    std::size_t junta_rounds = 0;
    int support_cap = kDefaultSupportCap;
    /// Worker count; 0 means all hardware threads. BGC_THREADS caps it.
    int threads = 0;

    SweepConfig();
    [[nodiscard]] SelectionRule selection_rule() const;
    /// Throws ConfigError on invalid settings.
    void validate() const;
};

/// Parses `key = value` text into a configuration; unknown keys are errors.
SweepConfig parse_sweep_config(std::istream &in);
SweepConfig load_sweep_config(const std::string &path);

/// Inclusive `a..b` or comma list.
std::vector<int> parse_int_range(const std::string &text);
std::vector<double> parse_real_list(const std::string &text);

/// Worker count after applying BGC_THREADS.
int effective_threads(int requested);

} // namespace bgc

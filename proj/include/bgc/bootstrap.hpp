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
 * Bootstrapping a unitary estimate to Heisenberg scaling with powered queries.
 *
 * Round j uses p_j = 2^j, picks R_j close to (U V_j^dag)^{p_j} from the
 * candidates {(U_i V_j^dag)^{p_j}} and sets V_{j+1} = R_j^{1/p_j} V_j, for
 * j = 0..t with t = ceil(log2(1 / (eps sqrt(d)))).
 */
#pragma once

#include <optional>
#include <vector>

#include "bgc/learners.hpp"

namespace bgc {

struct BootstrapOptions {
    /// Replace the shadow learner by the exact nearest candidate.
    bool exact_selection = false;
    /// In exact mode: pick the worst candidate whose d_avg to the target is
    /// at most this value, falling back to the nearest one.
    std::optional<double> adversarial_accuracy;
    /// Inner learner accuracy; defaults to 1 / (25000 sqrt(d)).
    std::optional<double> inner_epsilon;
};

struct BootstrapStep {
    int j = 0;
    long long p = 1;
    double eta = 0.0;
    std::size_t selected = 0;
    /// d_avg between the selected R_j and the true (U V_j^dag)^{p_j}.
    double selection_error = 0.0;
};

struct BootstrapResult {
    DenseUnitary estimate;
    int t = 0;
    std::vector<BootstrapStep> steps;
    /// errors[j] = d_F'(U, V_j) for j = 0..t+1, with V_0 = I.
    std::vector<double> errors;
    std::size_t queries = 0;
};

/// t = ceil(log2(1 / (eps sqrt(d)))); throws InvalidRegime unless eps < 1/sqrt(d).
int bootstrap_iterations(double epsilon, std::size_t dim);

/// eta_j = 8^{j - t - 1} delta.
double bootstrap_eta(int j, int t, double delta);

BootstrapResult bootstrap_learn(UnitaryOracle &oracle, const CandidateNet &net, const LearnConfig &cfg,
                                const BootstrapOptions &options, Rng &rng);

/// U with its global phase turned so that its eigenphases are centred on 0.
DenseUnitary centre_phases(const DenseUnitary &u);

} // namespace bgc

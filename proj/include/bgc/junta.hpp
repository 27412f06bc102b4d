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
 * Identification of the qubits an unknown state or unitary touches, and
 * postselection of the remaining qubits onto |0>.
 *
 * A qubit enters the estimate only after a nonzero measurement outcome on
 * it, which is impossible for a qubit that no gate acts on.
 */
#pragma once

#include <functional>
#include <vector>

#include "bgc/oracles.hpp"
#include "bgc/qcore.hpp"

namespace bgc {

struct SupportEstimate {
    std::vector<int> support;
    std::size_t rounds_used = 0;
};

/// Rounds ceil(28 ln(2^{2G} / delta1) / (3 eps1)).
std::size_t junta_rounds(double eps1, double delta1, int G);

/// Rounds for end-to-end accuracy eps: eps1 = (eps / 24)^2.
std::size_t default_junta_rounds(double epsilon, double delta, int G);

/// Measures N copies in the computational basis and unions the supports.
SupportEstimate identify_support_state(const std::function<PureState()> &sample_oracle, int n,
                                       std::size_t rounds, Rng &rng);

/// Each round measures U_x^dag U U_x |0> for a fresh random stabilizer frame.
SupportEstimate identify_support_unitary(UnitaryOracle &oracle, std::size_t rounds, Rng &rng);

/// Each round measures every qubit pair of a Choi copy in the Pauli-Choi
/// basis; pair q reporting anything but the identity adds q.
SupportEstimate identify_support_choi(const std::function<PureState()> &choi_oracle, int n,
                                      std::size_t rounds, Rng &rng);
SupportEstimate identify_support_choi(UnitaryOracle &oracle, std::size_t rounds, Rng &rng);

struct PostselectResult {
    PureState state;
    double success_prob = 1.0;
};

/// Normalized projection onto |0> on `qubits`, and the probability of that
/// outcome. The projected qubits leave the active set.
PostselectResult postselect_zero(const PureState &state, const std::vector<int> &qubits);

/// Qubits of `state` that are active but outside `keep`.
std::vector<int> active_outside(const PureState &state, const std::vector<int> &keep);

} // namespace bgc

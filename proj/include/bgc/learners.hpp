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
 * Learners for states and unitaries of bounded gate complexity.
 *
 * All of them end in the same step: snapshots of (a postselected copy of) the
 * unknown state are scored against candidate states on a fixed region, and a
 * candidate is picked by one of two rules.
 *
 *  - overlap_argmax: estimate tr(sigma_i rho) and take the largest. An
 *    estimation error e gives d_tr^2 <= eta^2 + 2e, so e = eps^2 / 2.
 *  - helstrom_tournament: estimate tr(A_ij rho) for every ordered pair and
 *    pick i minimizing max_j |tr(A_ij sigma_i) - estimate|. An estimation
 *    error e gives d_tr <= 3 eta + 2e, so e = eps / 2.
 */
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bgc/junta.hpp"
#include "bgc/nets.hpp"
#include "bgc/oracles.hpp"
#include "bgc/shadows.hpp"

namespace bgc {

enum class SelectionRule { OverlapArgmax, HelstromTournament };

const char *rule_name(SelectionRule rule);
SelectionRule parse_rule(const std::string &name);

struct LearnConfig {
    double epsilon = 0.1;
    double delta = 0.05;
    ShadowScheme scheme = ShadowScheme::Haar;
    std::optional<MedianOfMeansConfig> mom;
    SelectionRule rule = SelectionRule::OverlapArgmax;
    /// Unset: default_junta_rounds. Zero: skip identification and
    /// take the net's region as the support.
    std::optional<std::size_t> junta_rounds;
    /// G used for the default junta rounds; 0 means ceil(|net region| / 2).
    int gate_count = 0;
    double shadow_constant = 102.0;
    int support_cap = kDefaultSupportCap;
    int dense_limit = kDenseRotationLimit;

    void validate() const;
};

struct HelstromObservable {
    /// Zero or one pair (1, u); sigma_i - sigma_j has rank at most 2.
    std::vector<std::pair<double, CVector>> eigenpairs;
    std::pair<std::size_t, std::size_t> pair_ids{0, 1};
    /// Qubits the eigenvectors are written over.
    std::vector<int> region;
    /// tr(A sigma_i) - tr(A sigma_j), which equals the trace distance.
    double gap = 0.0;

    [[nodiscard]] LowRankObservable observable() const;
};

HelstromObservable helstrom_observable(const PureState &sigma_i, const PureState &sigma_j);

struct SelectionScores {
    std::size_t index = 0;
    /// Per-candidate statistic: estimated overlap (argmax rule) or the
    /// tournament distance (argmin rule).
    std::vector<double> scores;
};

using RowMatrixXd = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Single-shot values (d + 1)|<psi_i|v_j>|^2 - 1, one row per candidate.
RowMatrixXd overlap_values(std::span<const CVector> candidates, std::span<const CVector> basis_vectors);

/// Single-shot values (d + 1)|<x_j|U_i^dag v_j>|^2 - 1 for inputs x_j and
/// snapshot vectors v_j on `region`; candidates act on `net_region`.
RowMatrixXd no_ancilla_values(const std::vector<DenseUnitary> &candidates, const std::vector<int> &net_region,
                              const std::vector<int> &region, std::span<const CVector> inputs,
                              std::span<const CVector> basis_vectors, int support_cap = kDefaultSupportCap);

/// Selection from snapshot basis vectors of the target on the candidates' region.
SelectionScores select_from_snapshots(std::span<const CVector> candidates, std::span<const CVector> basis_vectors,
                                      SelectionRule rule, const MedianOfMeansConfig &mom);

/// Tournament selections with plain means over the first N snapshots, for
/// every N in `prefix_lengths` (each at most basis_vectors.size()).
std::vector<std::size_t> tournament_prefix_indices(std::span<const CVector> candidates,
                                                   std::span<const CVector> basis_vectors,
                                                   std::span<const int> prefix_lengths);

/// Budget implied by cfg for M candidates (cfg.mom when set).
MedianOfMeansConfig selection_budget(const LearnConfig &cfg, std::size_t num_candidates);

struct LearnResult {
    std::size_t index = 0;
    std::optional<Circuit> circuit;
    SupportEstimate support;
    /// Qubits the snapshots were taken on.
    std::vector<int> region;
    std::vector<double> scores;
    std::size_t queries = 0;
    std::size_t snapshots = 0;
    std::size_t postselection_failures = 0;
};

/// Hypothesis selection by shadows of copies of an unknown state. The copies
/// are postselected onto |0> outside `region` and candidates must be written
/// over `region`.
LearnResult select_by_shadows(const std::function<PureState()> &copy, const std::vector<PureState> &candidates,
                              const std::vector<int> &region, const LearnConfig &cfg, Rng &rng);

LearnResult learn_state(StateOracle &oracle, const CandidateNet &net, const LearnConfig &cfg, Rng &rng);

/// Random stabilizer inputs, one Haar or Clifford snapshot per query, and
/// argmax of the median-of-means overlaps; default budget eps' = eps^2 / 8.
/// The observables depend on the random input, so only the argmax rule applies.
LearnResult learn_unitary_no_ancilla(UnitaryOracle &oracle, const CandidateNet &net, const LearnConfig &cfg,
                                     Rng &rng);

/// State learning on Choi states, with the Choi junta.
LearnResult learn_unitary_choi(UnitaryOracle &oracle, const CandidateNet &net, const LearnConfig &cfg, Rng &rng);

/// Choi learning from an arbitrary source of Choi copies (on 2n qubits,
/// Pauli pair frame) against bare candidate unitaries acting on `region`.
LearnResult learn_choi_states(const std::function<PureState()> &choi_copy, int n,
                              const std::vector<DenseUnitary> &candidates, const std::vector<int> &region,
                              const LearnConfig &cfg, Rng &rng);

/// U^exponent on the principal branch: eigenphases in (-pi, pi] are scaled.
DenseUnitary matrix_power_root(const DenseUnitary &u, double exponent);

} // namespace bgc

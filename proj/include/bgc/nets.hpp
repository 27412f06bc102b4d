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
 * Candidate nets for hypothesis selection.
 *
 * Nets are enumerated over a discrete gate set and a list of gate
 * configurations (target-pair sequences). Candidate index
 *   config * g^G + a
 * uses gate digit (a / g^(G-1-i)) % g at position i.
 */
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bgc/qcore.hpp"

namespace bgc {

struct NamedGate {
    std::string name;
    Gate4 matrix;
};

class GateSet {
  public:
    GateSet() = default;
    explicit GateSet(std::vector<NamedGate> gates);

    /// g independent Haar-random two-qubit gates named h0, h1, ...
    static GateSet haar(std::size_t g, Rng &rng);

    [[nodiscard]] std::size_t size() const { return gates_.size(); }
    [[nodiscard]] const NamedGate &operator[](std::size_t i) const { return gates_[i]; }
    [[nodiscard]] const std::vector<NamedGate> &gates() const { return gates_; }

    /// FNV-1a over the 17-digit text of every entry.
    [[nodiscard]] std::uint64_t hash() const;

    /// The union of this set and `other`, keeping this set's order first.
    [[nodiscard]] GateSet extended(const GateSet &other) const;

  private:
    std::vector<NamedGate> gates_;
};

using Configuration = std::vector<std::pair<int, int>>;

enum class NetMode { State, Unitary };

const char *net_mode_name(NetMode mode);

class CandidateNet {
  public:
    /// Builds cached objects for explicit circuits on their joint support.
    static CandidateNet from_circuits(std::vector<Circuit> circuits, NetMode mode,
                                      int support_cap = kDefaultSupportCap);

    /// Unitary-mode net of bare matrices acting on `region` of n qubits.
    static CandidateNet from_unitaries(std::vector<DenseUnitary> unitaries, std::vector<int> region,
                                       int n_qubits);

    /// State-mode net of bare states sharing n_total.
    static CandidateNet from_states(std::vector<PureState> states);

    [[nodiscard]] NetMode mode() const { return mode_; }
    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] bool empty() const { return size_ == 0; }
    [[nodiscard]] int n_qubits() const { return n_qubits_; }
    /// Sorted union of all candidate supports.
    [[nodiscard]] const std::vector<int> &region() const { return region_; }

    [[nodiscard]] bool has_circuits() const { return !circuits_.empty(); }
    [[nodiscard]] const Circuit &circuit(std::size_t i) const;
    [[nodiscard]] const std::vector<Circuit> &circuits() const { return circuits_; }

    /// Candidate output state, written over region() (state mode) or the
    /// candidate applied to |0> (unitary mode).
    [[nodiscard]] const PureState &state(std::size_t i) const;
    /// Candidate unitary on region() (unitary mode only).
    [[nodiscard]] const DenseUnitary &unitary(std::size_t i) const;
    [[nodiscard]] const std::vector<DenseUnitary> &unitaries() const { return unitaries_; }
    [[nodiscard]] const std::vector<PureState> &states() const { return states_; }

    /// Bookkeeping from enumerate_net, empty otherwise.
    std::vector<Configuration> configurations;
    std::uint64_t gate_set_hash = 0;

  private:
    NetMode mode_ = NetMode::State;
    std::size_t size_ = 0;
    int n_qubits_ = 1;
    std::vector<int> region_;
    std::vector<Circuit> circuits_;
    std::vector<PureState> states_;
    std::vector<DenseUnitary> unitaries_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1000000;

/// All g^G gate assignments over every configuration (each of length G).
CandidateNet enumerate_net(const GateSet &gate_set, const std::vector<Configuration> &configurations, int G,
                           NetMode mode, int n_qubits, std::size_t enumeration_cap = kDefaultEnumerationCap,
                           int support_cap = kDefaultSupportCap);

/// Every sequence of G pairs (i < j) drawn from `qubits`, in lexicographic order.
std::vector<Configuration> all_configurations(const std::vector<int> &qubits, int G,
                                              std::size_t cap = kDefaultEnumerationCap);

enum class UnitaryMetric { Davg, DfPrime };

const char *metric_name(UnitaryMetric metric);

struct EpsilonNetResult {
    CandidateNet net;
    /// False when the budget ran out before every probe was covered.
    bool complete = false;
};

/// Accumulates Haar-random unitaries on k qubits until 200 held-out Haar
/// probes each have a net element within epsilon, or until `budget` elements.
EpsilonNetResult sample_epsilon_net(int k, double epsilon, UnitaryMetric metric, Rng &rng,
                                    std::size_t budget = 10000, std::size_t probes = 200);

struct NearestCandidate {
    std::size_t index = 0;
    double distance = 0.0;
};

/// Exhaustive scan in trace distance; ties go to the lowest index.
NearestCandidate net_min_distance(const CandidateNet &net, const PureState &target);
/// Exhaustive scan over unitaries on the net's region.
NearestCandidate net_min_distance(const CandidateNet &net, const DenseUnitary &target, UnitaryMetric metric);

/// Manifest: header, configuration list, then every candidate circuit.
void write_net_manifest(std::ostream &out, const CandidateNet &net);
CandidateNet read_net_manifest(std::istream &in, int support_cap = kDefaultSupportCap);

} // namespace bgc

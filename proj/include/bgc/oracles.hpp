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
 * Query access to unknown states and unitaries.
 *
 * Learners only see these handles. Each handle counts how often it was used,
 * and `reveal` exists for diagnostics and exact-selection experiments.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bgc/qcore.hpp"

namespace bgc {

class StateOracle {
  public:
    explicit StateOracle(PureState state) : state_(std::move(state)) {}
    static StateOracle from_circuit(const Circuit &circuit, int support_cap = kDefaultSupportCap);

    [[nodiscard]] int n_qubits() const { return state_.n_total(); }

    /// One fresh copy of the unknown state.
    PureState copy() {
        ++copies_;
        return state_;
    }

    [[nodiscard]] std::size_t copies_used() const { return copies_; }
    [[nodiscard]] const PureState &reveal() const { return state_; }

  private:
    PureState state_;
    std::size_t copies_ = 0;
};

/// A product of single-qubit stabilizer preparations over all n qubits whose
/// labels are fixed by a seed and drawn only when a qubit is first asked for.
class ProductFrame {
  public:
    explicit ProductFrame(std::uint64_t seed) : seed_(seed) {}

    [[nodiscard]] std::uint8_t label(int qubit) const;

    /// Applies the preparation unitaries U_x (or their adjoints) on `qubits`.
    [[nodiscard]] PureState prepare(const PureState &state, const std::vector<int> &qubits,
                                    int support_cap = kDefaultSupportCap) const;
    [[nodiscard]] PureState unprepare(const PureState &state, const std::vector<int> &qubits,
                                      int support_cap = kDefaultSupportCap) const;

    /// The product state |x> restricted to `qubits`, as a 2^|qubits| vector.
    [[nodiscard]] CVector product_vector(const std::vector<int> &qubits) const;

  private:
    std::uint64_t seed_;
};

class UnitaryOracle {
  public:
    explicit UnitaryOracle(Circuit hidden, int support_cap = kDefaultSupportCap);
    /// A dense unitary acting on `support` (sorted) of n qubits.
    UnitaryOracle(DenseUnitary u, std::vector<int> support, int n_qubits, int support_cap = kDefaultSupportCap);

    [[nodiscard]] int n_qubits() const { return n_; }
    [[nodiscard]] const std::vector<int> &support() const { return support_; }

    /// U applied to an arbitrary input state.
    PureState apply(const PureState &input);

    /// U_x^dag U U_x |0...0> for the stabilizer frame x. Outside the support
    /// of U the frame cancels, so it is only materialized on that support.
    PureState apply_conjugated(const ProductFrame &frame);

    /// Choi state of U in the per-pair Pauli frame on a 2n-qubit register.
    PureState choi_copy();

    /// Choi state of (U R)^power, where R acts on `right_region`; counts
    /// `power` queries.
    PureState choi_copy_powered(const DenseUnitary &right, const std::vector<int> &right_region, int power);

    [[nodiscard]] std::size_t queries_used() const { return queries_; }

    /// The hidden circuit; throws for dense oracles.
    [[nodiscard]] const Circuit &reveal() const;
    /// U on the given region (must contain its support).
    [[nodiscard]] DenseUnitary reveal_unitary(const std::vector<int> &region) const;

  private:
    PureState run(const PureState &input) const;

    std::optional<Circuit> hidden_;
    std::optional<DenseUnitary> dense_;
    int n_ = 1;
    int cap_;
    std::vector<int> support_;
    std::optional<PureState> choi_cache_;
    std::size_t queries_ = 0;
};

} // namespace bgc

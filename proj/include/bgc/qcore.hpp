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
 * Dense pure-state simulation of circuits of two-qubit gates whose support is
 * small compared to the total number of qubits.
 *
 * Qubits that no gate has touched are never stored: a PureState keeps
 * amplitudes only over its sorted `active` set and every other qubit is
 * implicitly |0>. Within the active set the first qubit is the most
 * significant bit of the amplitude index, so |q0 q1 ...> reads left to right.
 */
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bgc/error.hpp"
#include "bgc/types.hpp"

namespace bgc {

/// Largest deviation of M^dagger M from the identity, entrywise.
double unitarity_error(const CMatrix &m);

/// A square unitary of power-of-two dimension.
class DenseUnitary {
  public:
    DenseUnitary() : m_(CMatrix::Identity(1, 1)) {}
    explicit DenseUnitary(CMatrix m, double tol = kUnitarityTol);

    static DenseUnitary identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    [[nodiscard]] int num_qubits() const;
    [[nodiscard]] const CMatrix &matrix() const { return m_; }
    [[nodiscard]] DenseUnitary adjoint() const;

    /// Matrix product; `(*this) * other` applies `other` first.
    DenseUnitary operator*(const DenseUnitary &other) const;

  private:
    struct Unchecked {};
    DenseUnitary(CMatrix m, Unchecked) : m_(std::move(m)) {}

    CMatrix m_;
};

/// A two-qubit gate acting on the ordered pair (q1, q2). The 4x4 matrix is
/// indexed by 2*bit(q1) + bit(q2).
class GatePlacement {
  public:
    GatePlacement(const Gate4 &matrix, int q1, int q2);

    [[nodiscard]] const Gate4 &matrix() const { return matrix_; }
    [[nodiscard]] int q1() const { return q1_; }
    [[nodiscard]] int q2() const { return q2_; }
    [[nodiscard]] GatePlacement inverse() const;

  private:
    Gate4 matrix_;
    int q1_;
    int q2_;
};

/// Ordered list of gate placements on n qubits. Gate 0 is applied first.
class Circuit {
  public:
    explicit Circuit(int n_qubits);
    Circuit(int n_qubits, std::vector<GatePlacement> gates);

    void add(GatePlacement gate);
    void add(const Gate4 &matrix, int q1, int q2) { add(GatePlacement(matrix, q1, q2)); }

    [[nodiscard]] int n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t gate_count() const { return gates_.size(); }
    [[nodiscard]] const std::vector<GatePlacement> &gates() const { return gates_; }

    /// Sorted union of all gate targets.
    [[nodiscard]] std::vector<int> active_support() const;

    /// Gates of `other` appended after the gates of this circuit.
    [[nodiscard]] Circuit then(const Circuit &other) const;
    [[nodiscard]] Circuit inverse() const;

  private:
    int n_qubits_;
    std::vector<GatePlacement> gates_;
};

/// Normalized pure state on n_total qubits with explicit amplitudes over the
/// active qubits only.
class PureState {
  public:
    /// |0...0> on n_total qubits with an empty active set.
    static PureState zero(int n_total);

    /// Validates sortedness of `active`, ranges and normalization.
    PureState(int n_total, std::vector<int> active, CVector amplitudes);

    [[nodiscard]] int n_total() const { return n_total_; }
    [[nodiscard]] const std::vector<int> &active() const { return active_; }
    [[nodiscard]] const CVector &amplitudes() const { return amps_; }
    [[nodiscard]] int num_active() const { return static_cast<int>(active_.size()); }

    /// Position of qubit q in the active list, or -1.
    [[nodiscard]] int position_of(int q) const;

    /// The same state written over a superset of the active qubits.
    [[nodiscard]] PureState expanded(const std::vector<int> &new_active) const;

  private:
    int n_total_ = 0;
    std::vector<int> active_;
    CVector amps_;
};

/// Labels 0..5 stand for |0>, |1>, |x+>, |x->, |y+>, |y->.
struct StabilizerProductLabel {
    std::vector<std::uint8_t> labels;
};

/// Single-qubit unitary preparing the stabilizer state with the given label
/// from |0>.
Gate2 stabilizer_preparation(std::uint8_t label);

/// Sorted union of two qubit lists.
std::vector<int> merge_qubits(const std::vector<int> &a, const std::vector<int> &b);

/// Applies every gate of `circuit` to `input` in order.
PureState run_circuit(const Circuit &circuit, const PureState &input,
                      int support_cap = kDefaultSupportCap);

/// Applies one placement; the active set grows to include its targets.
PureState apply_gate(const PureState &state, const GatePlacement &gate,
                     int support_cap = kDefaultSupportCap);

PureState apply_single_qubit(const PureState &state, int qubit, const Gate2 &u,
                             int support_cap = kDefaultSupportCap);

/// Applies a dense unitary on the listed qubits (first listed qubit is the
/// most significant index bit of `u`).
PureState apply_unitary(const PureState &state, const DenseUnitary &u,
                        const std::vector<int> &qubits,
                        int support_cap = kDefaultSupportCap);

/// The 2^|subset| unitary of `circuit` with the subset's first qubit as the
/// most significant bit.
DenseUnitary circuit_unitary(const Circuit &circuit, const std::vector<int> &subset,
                             int support_cap = kDefaultSupportCap);

/// Drops active qubits whose |1> population is at most `tol`, renormalizing.
PureState compact(const PureState &state, double tol = 1e-24);

/// <a|b>, aligning the two active sets with implicit |0> padding.
cplx inner_product(const PureState &a, const PureState &b);

/// Index of a computational-basis outcome over the active qubits, drawn with
/// probability |amplitude|^2.
std::uint64_t sample_index(const PureState &state, Rng &rng);

/// Bits of a computational-basis outcome, aligned with `state.active()`.
/// Qubits outside the active set always read 0.
std::vector<std::uint8_t> sample_computational(const PureState &state, Rng &rng);

namespace gates {
Gate2 identity2();
Gate2 pauli_x();
Gate2 pauli_y();
Gate2 pauli_z();
Gate2 hadamard();
Gate2 phase_s();
Gate4 cnot();
Gate4 kron(const Gate2 &a, const Gate2 &b);
} // namespace gates

} // namespace bgc

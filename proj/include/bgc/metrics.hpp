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
 * Distances between pure states and between unitaries, and Choi states.
 *
 * Unitary distances are all phase-insensitive. The spectral and diamond
 * distances are evaluated exactly from the eigenphases of U^dag V: if the
 * eigenphases fit in a smallest arc of length L, then
 *
 *   d2'(U, V)   = 2 sin(L / 4)
 *   d_dia(U, V) = 2 sin(L / 2)  for L < pi, and 2 otherwise.
 */
#pragma once

#include <vector>

#include "bgc/qcore.hpp"

namespace bgc {

/// sqrt(1 - |<psi|phi>|^2). Active sets may differ.
double trace_distance_pure(const PureState &psi, const PureState &phi);

/// |<psi|phi>|^2.
double fidelity_pure(const PureState &psi, const PureState &phi);

double davg(const DenseUnitary &u, const DenseUnitary &v);
double df_prime(const DenseUnitary &u, const DenseUnitary &v);
double d2_prime(const DenseUnitary &u, const DenseUnitary &v);
double diamond_distance(const DenseUnitary &u, const DenseUnitary &v);

/// Eigenphases of U^dag V in (-pi, pi].
std::vector<double> relative_eigenphases(const DenseUnitary &u, const DenseUnitary &v);

/// Length of the shortest arc of the unit circle containing all given phases.
double minimal_covering_arc(std::vector<double> phases);

/// Average of |<x|U^dag V|x>|^2 over all 6^k products of single-qubit
/// stabilizer states, so that d_Q^2 = 1 - (this value). Requires k <= 6.
double stabilizer_average_overlap(const DenseUnitary &u, const DenseUnitary &v);

/// Root mean squared output trace distance over random stabilizer products.
double dq_exact(const DenseUnitary &u, const DenseUnitary &v);

struct ChoiState {
    std::size_t base_dim = 1;
    /// Amplitude at index i*d + j is U_ij / sqrt(d); system qubits come first.
    PureState state = PureState::zero(1);
};

ChoiState choi_state(const DenseUnitary &u, int support_cap = kDefaultSupportCap);

/**
 * Choi state of U written in the per-pair Pauli basis.
 *
 * Qubit q of the region is represented by the pair (2q, 2q+1) of a register
 * of 2 * n_qubits qubits. The two bits of pair q hold the label of the Pauli
 * acting on q (0:I, 1:X, 2:Y, 3:Z), and the amplitude of the label string x
 * is tr(sigma_x U) / d. In this frame the Choi state of the identity on a
 * qubit is |00> on its pair, so untouched qubits stay implicit.
 */
PureState choi_state_pauli_frame(const DenseUnitary &u, const std::vector<int> &region, int n_qubits,
                                 int support_cap = kDefaultSupportCap);

/// The 4x4 change of basis from the computational pair frame to the Pauli pair frame.
Gate4 pauli_pair_rotation();

} // namespace bgc

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

#pragma once

#include <utility>
#include <vector>

#include "bgc/qcore.hpp"

namespace bgc {

/// Random streams for indexed draws. Index j reads from an engine seeded with
/// derive_seed(seed, j / kBlock), continuing after the draws of the earlier
/// indices of its block, so any worker that owns whole blocks reproduces the
/// same values. Within a block, indices must be visited in order.
class IndexedStreams {
  public:
    static constexpr std::size_t kBlock = 256;

    explicit IndexedStreams(std::uint64_t seed) : seed_(seed) {}

    Rng &at(std::size_t j);

  private:
    std::uint64_t seed_;
    std::size_t next_ = 0;
    bool started_ = false;
    Rng rng_;
};

/// Haar-distributed unitary of dimension `dim` (QR of a complex Ginibre
/// matrix with the diagonal phases of R absorbed into Q).
DenseUnitary sample_haar_unitary(std::size_t dim, Rng &rng);

/// Haar-random normalized vector of dimension `dim`.
CVector sample_haar_vector(std::size_t dim, Rng &rng);

/// Uniformly random k-qubit Clifford (up to global phase), returned as a dense
/// matrix. Sampled as a uniform symplectic tableau with uniform signs. k <= 6.
DenseUnitary sample_random_clifford(int k, Rng &rng);

/// Tensor product of the given single-qubit stabilizer states placed on
/// `qubits` of an n_total-qubit register.
PureState stabilizer_product_state(const StabilizerProductLabel &label, const std::vector<int> &qubits,
                                   int n_total);

/// Uniform label over {0..5}^k and the matching state on qubits 0..k-1.
std::pair<StabilizerProductLabel, PureState> sample_stabilizer_product(int k, Rng &rng);

} // namespace bgc

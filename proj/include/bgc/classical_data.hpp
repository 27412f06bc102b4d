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
 * Exact unitary learning from classically described input/output pairs.
 *
 * Entangled data uses the inputs x_j = sum_{i in block j} |i>|i> / sqrt(Z_j)
 * over blocks of r consecutive basis indices. Mixed data uses the labelled
 * mixtures rho_j = sum_{i in block j} p_j |ii><ii|, described by their pure
 * components so that each output component U|i>|i> keeps its phase.
 *
 * Joint vectors put the system first: index (k * d + i) is |k>|i>.
 */
#pragma once

#include <iosfwd>
#include <vector>

#include "bgc/qcore.hpp"

namespace bgc {

enum class DatasetMode { Entangled, Mixed };

struct EntangledSample {
    CVector input;
    CVector output;
};

struct MixedComponent {
    double probability = 0.0;
    CVector input;
    CVector output;
};

struct MixedSample {
    std::vector<MixedComponent> components;
};

struct ClassicalDataset {
    DatasetMode mode = DatasetMode::Entangled;
    int n = 1;
    int r = 1;
    std::vector<EntangledSample> entangled;
    std::vector<MixedSample> mixed;

    [[nodiscard]] std::size_t size() const { return mode == DatasetMode::Entangled ? entangled.size() : mixed.size(); }
};

/// ceil(2^n / r) samples.
std::size_t required_samples(int n, int r);

ClassicalDataset make_entangled_dataset(const DenseUnitary &u, int r);
ClassicalDataset make_mixed_dataset(const DenseUnitary &u, int r);

DenseUnitary learn_from_entangled_data(const ClassicalDataset &dataset);
DenseUnitary learn_from_mixed_data(const ClassicalDataset &dataset);

/// Text form: `mode`, `n`, `r`, `samples` header lines, then per sample
/// either `pair` with input and output vectors, or `mixture <m>` followed by
/// m `component <p>` lines each with input and output vectors.
void write_dataset(std::ostream &out, const ClassicalDataset &dataset);
ClassicalDataset read_dataset(std::istream &in);

} // namespace bgc

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

#include "bgc/junta.hpp"

#include <algorithm>
#include <cmath>

namespace bgc {

std::size_t junta_rounds(double eps1, double delta1, int G) {
    if (!(eps1 > 0.0) || !(delta1 > 0.0 && delta1 < 1.0) || G < 0) {
        throw InvalidArgument("junta rounds need eps1 > 0, 0 < delta1 < 1, G >= 0");
    }
    const double log_term = 2.0 * G * std::log(2.0) - std::log(delta1);
    return static_cast<std::size_t>(std::ceil(28.0 * log_term / (3.0 * eps1)));
}

std::size_t default_junta_rounds(double epsilon, double delta, int G) {
    const double e = epsilon / 24.0;
    return junta_rounds(e * e, delta, G);
}

namespace {

void add_nonzero(std::vector<int> &acc, const std::vector<int> &active, const std::vector<std::uint8_t> &bits,
                 bool pairs) {
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0) {
            const int q = pairs ? active[i] / 2 : active[i];
            auto it = std::lower_bound(acc.begin(), acc.end(), q);
            if (it == acc.end() || *it != q) {
                acc.insert(it, q);
            }
        }
    }
}

} // namespace

SupportEstimate identify_support_state(const std::function<PureState()> &sample_oracle, int n,
                                       std::size_t rounds, Rng &rng) {
    SupportEstimate est;
    for (std::size_t r = 0; r < rounds; ++r) {
        const PureState s = sample_oracle();
        if (s.n_total() != n) {
            throw DimensionMismatch("oracle copy has the wrong number of qubits");
        }
        add_nonzero(est.support, s.active(), sample_computational(s, rng), false);
        ++est.rounds_used;
    }
    return est;
}

SupportEstimate identify_support_unitary(UnitaryOracle &oracle, std::size_t rounds, Rng &rng) {
    SupportEstimate est;
    for (std::size_t r = 0; r < rounds; ++r) {
        const ProductFrame frame(rng());
        const PureState s = oracle.apply_conjugated(frame);
        add_nonzero(est.support, s.active(), sample_computational(s, rng), false);
        ++est.rounds_used;
    }
    return est;
}

SupportEstimate identify_support_choi(const std::function<PureState()> &choi_oracle, int n, std::size_t rounds,
                                      Rng &rng) {
    SupportEstimate est;
    for (std::size_t r = 0; r < rounds; ++r) {
        const PureState s = choi_oracle();
        if (s.n_total() != 2 * n) {
            throw DimensionMismatch("Choi copy must live on 2n qubits");
        }
        add_nonzero(est.support, s.active(), sample_computational(s, rng), true);
        ++est.rounds_used;
    }
    return est;
}

SupportEstimate identify_support_choi(UnitaryOracle &oracle, std::size_t rounds, Rng &rng) {
    return identify_support_choi([&oracle] { return oracle.choi_copy(); }, oracle.n_qubits(), rounds, rng);
}

PostselectResult postselect_zero(const PureState &state, const std::vector<int> &qubits) {
    std::uint64_t mask = 0;
    std::vector<int> keep;
    const auto &active = state.active();
    const std::size_t k = active.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (std::find(qubits.begin(), qubits.end(), active[i]) != qubits.end()) {
            mask |= std::uint64_t{1} << (k - 1 - i);
        } else {
            keep.push_back(active[i]);
        }
    }
    if (mask == 0) {
        return {state, 1.0};
    }
    const CVector &amps = state.amplitudes();
    CVector out(static_cast<Eigen::Index>(std::uint64_t{1} << keep.size()));
    Eigen::Index w = 0;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amps.size()); ++i) {
        if ((i & mask) == 0) {
            out[w++] = amps[static_cast<Eigen::Index>(i)];
        }
    }
    const double p = out.squaredNorm();
    if (p < 1e-12) {
        throw PostselectionImpossible("zero outcome has probability " + std::to_string(p));
    }
    out /= std::sqrt(p);
    return {PureState(state.n_total(), std::move(keep), std::move(out)), std::min(p, 1.0)};
}

std::vector<int> active_outside(const PureState &state, const std::vector<int> &keep) {
    std::vector<int> out;
    for (int q : state.active()) {
        if (!std::binary_search(keep.begin(), keep.end(), q)) {
            out.push_back(q);
        }
    }
    return out;
}

} // namespace bgc

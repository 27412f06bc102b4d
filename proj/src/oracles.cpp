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

#include "bgc/oracles.hpp"

#include <algorithm>
#include <random>

#include "bgc/metrics.hpp"
#include "bgc/random.hpp"

namespace bgc {

StateOracle StateOracle::from_circuit(const Circuit &circuit, int support_cap) {
    return StateOracle(run_circuit(circuit, PureState::zero(circuit.n_qubits()), support_cap));
}

std::uint8_t ProductFrame::label(int qubit) const {
    Rng rng(derive_seed(seed_, static_cast<std::uint64_t>(qubit)));
    std::uniform_int_distribution<int> six(0, 5);
    return static_cast<std::uint8_t>(six(rng));
}

PureState ProductFrame::prepare(const PureState &state, const std::vector<int> &qubits, int support_cap) const {
    PureState s = state;
    for (int q : qubits) {
        const std::uint8_t l = label(q);
        if (l != 0) {
            s = apply_single_qubit(s, q, stabilizer_preparation(l), support_cap);
        }
    }
    return s;
}

PureState ProductFrame::unprepare(const PureState &state, const std::vector<int> &qubits, int support_cap) const {
    PureState s = state;
    for (int q : qubits) {
        const std::uint8_t l = label(q);
        if (l != 0) {
            s = apply_single_qubit(s, q, stabilizer_preparation(l).adjoint(), support_cap);
        }
    }
    return s;
}

CVector ProductFrame::product_vector(const std::vector<int> &qubits) const {
    CVector v = CVector::Ones(1);
    for (int q : qubits) {
        const CVector s = stabilizer_preparation(label(q)).col(0);
        CVector next(v.size() * 2);
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            next[2 * i] = v[i] * s[0];
            next[2 * i + 1] = v[i] * s[1];
        }
        v = std::move(next);
    }
    return v;
}

UnitaryOracle::UnitaryOracle(Circuit hidden, int support_cap)
    : hidden_(std::move(hidden)), n_(hidden_->n_qubits()), cap_(support_cap), support_(hidden_->active_support()) {
    if (static_cast<int>(support_.size()) > cap_) {
        throw SupportCapExceeded("hidden circuit support exceeds the cap");
    }
}

UnitaryOracle::UnitaryOracle(DenseUnitary u, std::vector<int> support, int n_qubits, int support_cap)
    : dense_(std::move(u)), n_(n_qubits), cap_(support_cap), support_(std::move(support)) {
    if (!std::is_sorted(support_.begin(), support_.end()) ||
        std::adjacent_find(support_.begin(), support_.end()) != support_.end()) {
        throw InvalidArgument("support must be strictly increasing");
    }
    if (dense_->dim() != (std::size_t{1} << support_.size())) {
        throw DimensionMismatch("unitary does not match its support");
    }
    if (static_cast<int>(support_.size()) > cap_) {
        throw SupportCapExceeded("hidden unitary support exceeds the cap");
    }
    if (!support_.empty() && (support_.front() < 0 || support_.back() >= n_)) {
        throw DimensionMismatch("support outside the register");
    }
}

PureState UnitaryOracle::run(const PureState &input) const {
    if (hidden_) {
        return run_circuit(*hidden_, input, cap_);
    }
    if (support_.empty()) {
        return input;
    }
    return apply_unitary(input, *dense_, support_, cap_);
}

const Circuit &UnitaryOracle::reveal() const {
    if (!hidden_) {
        throw InvalidArgument("oracle wraps a dense unitary, not a circuit");
    }
    return *hidden_;
}

PureState UnitaryOracle::apply(const PureState &input) {
    if (input.n_total() != n_) {
        throw DimensionMismatch("input state has the wrong number of qubits");
    }
    ++queries_;
    return run(input);
}

PureState UnitaryOracle::apply_conjugated(const ProductFrame &frame) {
    ++queries_;
    PureState s = frame.prepare(PureState::zero(n_), support_, cap_);
    s = run(s);
    return compact(frame.unprepare(s, support_, cap_));
}

PureState UnitaryOracle::choi_copy() {
    ++queries_;
    if (!choi_cache_) {
        if (2 * static_cast<int>(support_.size()) > cap_) {
            throw SupportCapExceeded("Choi state of the hidden unitary exceeds the cap");
        }
        choi_cache_ = choi_state_pauli_frame(reveal_unitary(support_), support_, n_, cap_);
    }
    return *choi_cache_;
}

PureState UnitaryOracle::choi_copy_powered(const DenseUnitary &right, const std::vector<int> &right_region,
                                           int power) {
    if (power < 1) {
        throw InvalidArgument("power must be at least 1");
    }
    std::vector<int> sorted_right = right_region;
    std::sort(sorted_right.begin(), sorted_right.end());
    if (sorted_right != right_region) {
        throw InvalidArgument("right region must be sorted");
    }
    const std::vector<int> region = merge_qubits(support_, right_region);
    if (2 * static_cast<int>(region.size()) > cap_) {
        throw SupportCapExceeded("powered Choi state exceeds the cap");
    }
    queries_ += static_cast<std::size_t>(power);
    if (region.empty()) {
        return PureState::zero(2 * n_);
    }
    const CMatrix u = reveal_unitary(region).matrix();
    // Embed `right` into the joint region.
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << region.size());
    CMatrix r_full(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        CVector col = CVector::Zero(d);
        col[c] = 1.0;
        PureState basis(static_cast<int>(region.size()), [&] {
            std::vector<int> a(region.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                a[i] = static_cast<int>(i);
            }
            return a;
        }(), col);
        std::vector<int> local;
        for (int q : right_region) {
            local.push_back(static_cast<int>(std::lower_bound(region.begin(), region.end(), q) - region.begin()));
        }
        r_full.col(c) = apply_unitary(basis, right, local, cap_).expanded(basis.active()).amplitudes();
    }
    const CMatrix w = u * r_full;
    CMatrix acc = CMatrix::Identity(d, d);
    for (int i = 0; i < power; ++i) {
        acc = w * acc;
    }
    return choi_state_pauli_frame(DenseUnitary(acc, 1e-8), region, n_, cap_);
}

DenseUnitary UnitaryOracle::reveal_unitary(const std::vector<int> &region) const {
    if (hidden_) {
        return circuit_unitary(*hidden_, region, cap_);
    }
    if (region == support_) {
        return *dense_;
    }
    if (!std::includes(region.begin(), region.end(), support_.begin(), support_.end())) {
        throw TargetOutsideSubset("region does not contain the hidden support");
    }
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << region.size());
    std::vector<int> local;
    for (int q : support_) {
        local.push_back(static_cast<int>(std::lower_bound(region.begin(), region.end(), q) - region.begin()));
    }
    std::vector<int> all(region.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = static_cast<int>(i);
    }
    CMatrix m(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        CVector e = CVector::Zero(d);
        e[c] = 1.0;
        m.col(c) = apply_unitary(PureState(static_cast<int>(region.size()), all, e), *dense_, local, cap_)
                       .expanded(all)
                       .amplitudes();
    }
    return DenseUnitary(std::move(m), 1e-9);
}

} // namespace bgc

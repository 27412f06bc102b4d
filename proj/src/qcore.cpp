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

#include "bgc/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace bgc {

namespace {

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

int log2_exact(std::size_t x) {
    int k = 0;
    while ((std::size_t{1} << k) < x) {
        ++k;
    }
    return k;
}

void check_cap(std::size_t active, int cap) {
    if (active > static_cast<std::size_t>(cap)) {
        std::ostringstream msg;
        msg << "active support " << active << " exceeds cap " << cap;
        throw SupportCapExceeded(msg.str());
    }
}

// Bit mask of qubit `q` inside an index over `active` (first = most significant).
std::uint64_t bit_mask(const std::vector<int> &active, int q) {
    auto it = std::lower_bound(active.begin(), active.end(), q);
    auto pos = static_cast<std::size_t>(it - active.begin());
    return std::uint64_t{1} << (active.size() - 1 - pos);
}

// Multi-qubit kernel: applies `m` (dim 2^|masks|) to the bits selected by
// `masks`, masks[0] being the most significant local bit.
void apply_local(CVector &amps, const CMatrix &m, const std::vector<std::uint64_t> &masks) {
    const std::size_t k = masks.size();
    const std::size_t local = std::size_t{1} << k;
    std::uint64_t all = 0;
    for (auto mk : masks) {
        all |= mk;
    }
    std::vector<std::uint64_t> offsets(local, 0);
    for (std::size_t l = 0; l < local; ++l) {
        for (std::size_t b = 0; b < k; ++b) {
            if (l & (std::size_t{1} << (k - 1 - b))) {
                offsets[l] |= masks[b];
            }
        }
    }
    CVector in(static_cast<Eigen::Index>(local));
    CVector out(static_cast<Eigen::Index>(local));
    const auto total = static_cast<std::uint64_t>(amps.size());
    for (std::uint64_t base = 0; base < total; ++base) {
        if (base & all) {
            continue;
        }
        for (std::size_t l = 0; l < local; ++l) {
            in[static_cast<Eigen::Index>(l)] = amps[static_cast<Eigen::Index>(base | offsets[l])];
        }
        out.noalias() = m * in;
        for (std::size_t l = 0; l < local; ++l) {
            amps[static_cast<Eigen::Index>(base | offsets[l])] = out[static_cast<Eigen::Index>(l)];
        }
    }
}

void apply_two_qubit(CVector &amps, const Gate4 &g, std::uint64_t m1, std::uint64_t m2) {
    const auto total = static_cast<std::uint64_t>(amps.size());
    for (std::uint64_t base = 0; base < total; ++base) {
        if (base & (m1 | m2)) {
            continue;
        }
        const Eigen::Index i00 = static_cast<Eigen::Index>(base);
        const Eigen::Index i01 = static_cast<Eigen::Index>(base | m2);
        const Eigen::Index i10 = static_cast<Eigen::Index>(base | m1);
        const Eigen::Index i11 = static_cast<Eigen::Index>(base | m1 | m2);
        const cplx a0 = amps[i00], a1 = amps[i01], a2 = amps[i10], a3 = amps[i11];
        amps[i00] = g(0, 0) * a0 + g(0, 1) * a1 + g(0, 2) * a2 + g(0, 3) * a3;
        amps[i01] = g(1, 0) * a0 + g(1, 1) * a1 + g(1, 2) * a2 + g(1, 3) * a3;
        amps[i10] = g(2, 0) * a0 + g(2, 1) * a1 + g(2, 2) * a2 + g(2, 3) * a3;
        amps[i11] = g(3, 0) * a0 + g(3, 1) * a1 + g(3, 2) * a2 + g(3, 3) * a3;
    }
}

} // namespace

double unitarity_error(const CMatrix &m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    CMatrix d = m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// DenseUnitary

DenseUnitary::DenseUnitary(CMatrix m, double tol) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || !is_power_of_two(static_cast<std::size_t>(m_.rows()))) {
        throw DimensionMismatch("unitary must be square with power-of-two dimension");
    }
    const double err = unitarity_error(m_);
    if (!(err <= tol)) {
        std::ostringstream msg;
        msg << "matrix is not unitary (max |M^dag M - I| = " << err << ")";
        throw InvalidArgument(msg.str());
    }
}

DenseUnitary DenseUnitary::identity(std::size_t dim) {
    if (!is_power_of_two(dim)) {
        throw DimensionMismatch("identity dimension must be a power of two");
    }
    auto d = static_cast<Eigen::Index>(dim);
    return DenseUnitary(CMatrix::Identity(d, d), Unchecked{});
}

int DenseUnitary::num_qubits() const { return log2_exact(dim()); }

DenseUnitary DenseUnitary::adjoint() const { return DenseUnitary(m_.adjoint(), Unchecked{}); }

DenseUnitary DenseUnitary::operator*(const DenseUnitary &other) const {
    if (dim() != other.dim()) {
        throw DimensionMismatch("unitary product of different dimensions");
    }
    return DenseUnitary(m_ * other.m_, Unchecked{});
}

// ---------------------------------------------------------------------------
// GatePlacement / Circuit

GatePlacement::GatePlacement(const Gate4 &matrix, int q1, int q2) : matrix_(matrix), q1_(q1), q2_(q2) {
    if (q1 == q2 || q1 < 0 || q2 < 0) {
        throw InvalidArgument("gate targets must be distinct non-negative qubits");
    }
    const double err = unitarity_error(matrix_);
    if (!(err <= kUnitarityTol)) {
        std::ostringstream msg;
        msg << "gate matrix is not unitary (max |M^dag M - I| = " << err << ")";
        throw InvalidArgument(msg.str());
    }
}

GatePlacement GatePlacement::inverse() const { return {matrix_.adjoint(), q1_, q2_}; }

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits <= 0) {
        throw InvalidArgument("circuit needs at least one qubit");
    }
}

Circuit::Circuit(int n_qubits, std::vector<GatePlacement> gates) : Circuit(n_qubits) {
    gates_.reserve(gates.size());
    for (auto &g : gates) {
        add(std::move(g));
    }
}

void Circuit::add(GatePlacement gate) {
    if (gate.q1() >= n_qubits_ || gate.q2() >= n_qubits_) {
        throw InvalidArgument("gate target outside the circuit's qubits");
    }
    gates_.push_back(std::move(gate));
}

std::vector<int> Circuit::active_support() const {
    std::vector<int> out;
    out.reserve(2 * gates_.size());
    for (const auto &g : gates_) {
        out.push_back(g.q1());
        out.push_back(g.q2());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Circuit Circuit::then(const Circuit &other) const {
    if (other.n_qubits_ != n_qubits_) {
        throw DimensionMismatch("cannot concatenate circuits on different qubit counts");
    }
    Circuit out = *this;
    out.gates_.insert(out.gates_.end(), other.gates_.begin(), other.gates_.end());
    return out;
}

Circuit Circuit::inverse() const {
    Circuit out(n_qubits_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(it->inverse());
    }
    return out;
}

// ---------------------------------------------------------------------------
// PureState

PureState PureState::zero(int n_total) {
    CVector amps(1);
    amps[0] = 1.0;
    return PureState(n_total, {}, std::move(amps));
}

PureState::PureState(int n_total, std::vector<int> active, CVector amplitudes)
    : n_total_(n_total), active_(std::move(active)), amps_(std::move(amplitudes)) {
    if (n_total_ <= 0) {
        throw InvalidArgument("state needs at least one qubit");
    }
    if (active_.size() > 62) {
        throw SupportCapExceeded("active set too large to index");
    }
    for (std::size_t i = 0; i < active_.size(); ++i) {
        if (active_[i] < 0 || active_[i] >= n_total_) {
            throw InvalidArgument("active qubit out of range");
        }
        if (i > 0 && active_[i] <= active_[i - 1]) {
            throw InvalidArgument("active qubits must be strictly increasing");
        }
    }
    if (static_cast<std::uint64_t>(amps_.size()) != (std::uint64_t{1} << active_.size())) {
        throw DimensionMismatch("amplitude count must be 2^|active|");
    }
    const double norm = amps_.norm();
    if (!(std::abs(norm - 1.0) <= kNormTol)) {
        std::ostringstream msg;
        msg << "state is not normalized (norm = " << norm << ")";
        throw InvalidArgument(msg.str());
    }
}

int PureState::position_of(int q) const {
    auto it = std::lower_bound(active_.begin(), active_.end(), q);
    if (it == active_.end() || *it != q) {
        return -1;
    }
    return static_cast<int>(it - active_.begin());
}

PureState PureState::expanded(const std::vector<int> &new_active) const {
    if (new_active == active_) {
        return *this;
    }
    if (!std::includes(new_active.begin(), new_active.end(), active_.begin(), active_.end())) {
        throw InvalidArgument("expansion target must contain the active set");
    }
    const std::size_t k_new = new_active.size();
    CVector out = CVector::Zero(static_cast<Eigen::Index>(std::uint64_t{1} << k_new));
    std::vector<std::uint64_t> masks;
    masks.reserve(active_.size());
    for (int q : active_) {
        masks.push_back(bit_mask(new_active, q));
    }
    const std::size_t k = active_.size();
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amps_.size()); ++i) {
        std::uint64_t j = 0;
        for (std::size_t b = 0; b < k; ++b) {
            if (i & (std::uint64_t{1} << (k - 1 - b))) {
                j |= masks[b];
            }
        }
        out[static_cast<Eigen::Index>(j)] = amps_[static_cast<Eigen::Index>(i)];
    }
    return PureState(n_total_, new_active, std::move(out));
}

PureState compact(const PureState &state, double tol) {
    const auto &active = state.active();
    const CVector &amps = state.amplitudes();
    std::vector<int> keep;
    for (int q : active) {
        const std::uint64_t m = bit_mask(active, q);
        double excited = 0.0;
        for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amps.size()); ++i) {
            if (i & m) {
                excited += std::norm(amps[static_cast<Eigen::Index>(i)]);
            }
        }
        if (excited > tol) {
            keep.push_back(q);
        }
    }
    if (keep.size() == active.size()) {
        return state;
    }
    const std::size_t k = keep.size();
    CVector out(static_cast<Eigen::Index>(std::uint64_t{1} << k));
    std::vector<std::uint64_t> masks;
    for (int q : keep) {
        masks.push_back(bit_mask(active, q));
    }
    for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(out.size()); ++j) {
        std::uint64_t i = 0;
        for (std::size_t b = 0; b < k; ++b) {
            if (j & (std::uint64_t{1} << (k - 1 - b))) {
                i |= masks[b];
            }
        }
        out[static_cast<Eigen::Index>(j)] = amps[static_cast<Eigen::Index>(i)];
    }
    out.normalize();
    return PureState(state.n_total(), std::move(keep), std::move(out));
}

// ---------------------------------------------------------------------------

Gate2 stabilizer_preparation(std::uint8_t label) {
    const Gate2 x = gates::pauli_x();
    const Gate2 h = gates::hadamard();
    const Gate2 s = gates::phase_s();
    switch (label) {
    case 0:
        return gates::identity2();
    case 1:
        return x;
    case 2:
        return h;
    case 3:
        return h * x;
    case 4:
        return s * h;
    case 5:
        return s * h * x;
    default:
        throw InvalidArgument("stabilizer label must be in 0..5");
    }
}

std::vector<int> merge_qubits(const std::vector<int> &a, const std::vector<int> &b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PureState apply_gate(const PureState &state, const GatePlacement &gate, int support_cap) {
    if (gate.q1() >= state.n_total() || gate.q2() >= state.n_total()) {
        throw DimensionMismatch("gate target outside the state's qubits");
    }
    std::vector<int> targets = {std::min(gate.q1(), gate.q2()), std::max(gate.q1(), gate.q2())};
    std::vector<int> active = merge_qubits(state.active(), targets);
    check_cap(active.size(), support_cap);
    PureState grown = state.expanded(active);
    CVector amps = grown.amplitudes();
    apply_two_qubit(amps, gate.matrix(), bit_mask(active, gate.q1()), bit_mask(active, gate.q2()));
    return PureState(state.n_total(), std::move(active), std::move(amps));
}

PureState run_circuit(const Circuit &circuit, const PureState &input, int support_cap) {
    if (circuit.n_qubits() != input.n_total()) {
        throw DimensionMismatch("circuit and state have different qubit counts");
    }
    std::vector<int> active = merge_qubits(input.active(), circuit.active_support());
    check_cap(active.size(), support_cap);
    CVector amps = input.expanded(active).amplitudes();
    for (const auto &g : circuit.gates()) {
        apply_two_qubit(amps, g.matrix(), bit_mask(active, g.q1()), bit_mask(active, g.q2()));
    }
    return PureState(input.n_total(), std::move(active), std::move(amps));
}

PureState apply_single_qubit(const PureState &state, int qubit, const Gate2 &u, int support_cap) {
    if (qubit < 0 || qubit >= state.n_total()) {
        throw DimensionMismatch("qubit outside the state");
    }
    std::vector<int> active = merge_qubits(state.active(), {qubit});
    check_cap(active.size(), support_cap);
    CVector amps = state.expanded(active).amplitudes();
    apply_local(amps, u, {bit_mask(active, qubit)});
    return PureState(state.n_total(), std::move(active), std::move(amps));
}

PureState apply_unitary(const PureState &state, const DenseUnitary &u, const std::vector<int> &qubits,
                        int support_cap) {
    if (u.dim() != (std::size_t{1} << qubits.size())) {
        throw DimensionMismatch("unitary dimension does not match qubit count");
    }
    for (int q : qubits) {
        if (q < 0 || q >= state.n_total()) {
            throw DimensionMismatch("qubit outside the state");
        }
    }
    std::vector<int> sorted = qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidArgument("repeated qubit in target list");
    }
    std::vector<int> active = merge_qubits(state.active(), sorted);
    check_cap(active.size(), support_cap);
    CVector amps = state.expanded(active).amplitudes();
    std::vector<std::uint64_t> masks;
    masks.reserve(qubits.size());
    for (int q : qubits) {
        masks.push_back(bit_mask(active, q));
    }
    apply_local(amps, u.matrix(), masks);
    return PureState(state.n_total(), std::move(active), std::move(amps));
}

DenseUnitary circuit_unitary(const Circuit &circuit, const std::vector<int> &subset, int support_cap) {
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    check_cap(sorted.size(), support_cap);
    for (const auto &g : circuit.gates()) {
        if (!std::binary_search(sorted.begin(), sorted.end(), g.q1()) ||
            !std::binary_search(sorted.begin(), sorted.end(), g.q2())) {
            throw TargetOutsideSubset("gate on (" + std::to_string(g.q1()) + "," + std::to_string(g.q2()) +
                                      ") is outside the subset");
        }
    }
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << sorted.size());
    CMatrix m = CMatrix::Identity(dim, dim);
    for (const auto &g : circuit.gates()) {
        const auto m1 = bit_mask(sorted, g.q1());
        const auto m2 = bit_mask(sorted, g.q2());
        for (Eigen::Index c = 0; c < dim; ++c) {
            CVector col = m.col(c);
            apply_two_qubit(col, g.matrix(), m1, m2);
            m.col(c) = col;
        }
    }
    return DenseUnitary(std::move(m), 1e-9);
}

cplx inner_product(const PureState &a, const PureState &b) {
    if (a.n_total() != b.n_total()) {
        throw DimensionMismatch("states on different qubit counts");
    }
    if (a.active() == b.active()) {
        return a.amplitudes().dot(b.amplitudes());
    }
    const std::vector<int> joint = merge_qubits(a.active(), b.active());
    const PureState ea = a.expanded(joint);
    const PureState eb = b.expanded(joint);
    return ea.amplitudes().dot(eb.amplitudes());
}

std::uint64_t sample_index(const PureState &state, Rng &rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double r = unif(rng);
    const CVector &amps = state.amplitudes();
    double acc = 0.0;
    std::uint64_t last_nonzero = 0;
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p > 0.0) {
            last_nonzero = static_cast<std::uint64_t>(i);
        }
        acc += p;
        if (r < acc) {
            return static_cast<std::uint64_t>(i);
        }
    }
    return last_nonzero;
}

std::vector<std::uint8_t> sample_computational(const PureState &state, Rng &rng) {
    const std::uint64_t idx = sample_index(state, rng);
    const std::size_t k = state.active().size();
    std::vector<std::uint8_t> bits(k);
    for (std::size_t b = 0; b < k; ++b) {
        bits[b] = static_cast<std::uint8_t>((idx >> (k - 1 - b)) & 1U);
    }
    return bits;
}

namespace gates {

Gate2 identity2() { return Gate2::Identity(); }

Gate2 pauli_x() {
    Gate2 m;
    m << 0, 1, 1, 0;
    return m;
}

Gate2 pauli_y() {
    Gate2 m;
    m << 0, cplx(0, -1), cplx(0, 1), 0;
    return m;
}

Gate2 pauli_z() {
    Gate2 m;
    m << 1, 0, 0, -1;
    return m;
}

Gate2 hadamard() {
    Gate2 m;
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

Gate2 phase_s() {
    Gate2 m;
    m << 1, 0, 0, cplx(0, 1);
    return m;
}

Gate4 cnot() {
    Gate4 m = Gate4::Zero();
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return m;
}

Gate4 kron(const Gate2 &a, const Gate2 &b) {
    Gate4 m;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return m;
}

} // namespace gates

} // namespace bgc

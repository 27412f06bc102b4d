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

#include "bgc/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace bgc {

namespace {

// Symplectic vectors over F2^(2k): bits 0..k-1 hold the X part of qubits
// 0..k-1 and bits k..2k-1 the Z part.
using Symp = std::uint32_t;

int symplectic_form(Symp a, Symp b, int k) {
    const Symp lo = (Symp{1} << k) - 1;
    const Symp ax = a & lo, az = a >> k, bx = b & lo, bz = b >> k;
    return (std::popcount(ax & bz) + std::popcount(az & bx)) & 1;
}

Symp combine(const std::vector<Symp> &basis, std::uint64_t coeffs) {
    Symp v = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeffs & (std::uint64_t{1} << i)) {
            v ^= basis[i];
        }
    }
    return v;
}

// Extracts a symplectic basis (pairs u_i, w_i with <u_i, w_i> = 1) from a
// spanning list of a nondegenerate subspace.
std::vector<Symp> symplectic_gram_schmidt(std::vector<Symp> pool, int k) {
    std::vector<Symp> out;
    while (!pool.empty()) {
        const Symp u = pool.back();
        pool.pop_back();
        if (u == 0) {
            continue;
        }
        auto partner = pool.end();
        for (auto it = pool.begin(); it != pool.end(); ++it) {
            if (symplectic_form(u, *it, k) == 1) {
                partner = it;
                break;
            }
        }
        if (partner == pool.end()) {
            continue;
        }
        const Symp w = *partner;
        pool.erase(partner);
        for (auto &x : pool) {
            Symp y = x;
            if (symplectic_form(x, w, k)) {
                y ^= u;
            }
            if (symplectic_form(x, u, k)) {
                y ^= w;
            }
            x = y;
        }
        out.push_back(u);
        out.push_back(w);
    }
    return out;
}

struct SignedPauli {
    Symp bits;
    bool negative;
};

// Applies the Hermitian Pauli (-1)^neg i^{|x&z|} X^x Z^z to `v`.
CVector apply_pauli(const SignedPauli &p, const CVector &v, int k) {
    const Symp lo = (Symp{1} << k) - 1;
    const Symp x = p.bits & lo, z = p.bits >> k;
    std::uint64_t xmask = 0, zmask = 0;
    for (int j = 0; j < k; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << (k - 1 - j);
        if (x & (Symp{1} << j)) {
            xmask |= bit;
        }
        if (z & (Symp{1} << j)) {
            zmask |= bit;
        }
    }
    static const cplx kIPow[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
    cplx phase = kIPow[std::popcount(x & z) & 3];
    if (p.negative) {
        phase = -phase;
    }
    CVector out(v.size());
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(v.size()); ++i) {
        const double sign = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
        out[static_cast<Eigen::Index>(i ^ xmask)] = phase * sign * v[static_cast<Eigen::Index>(i)];
    }
    return out;
}

} // namespace

DenseUnitary sample_haar_unitary(std::size_t dim, Rng &rng) {
    const auto d = static_cast<Eigen::Index>(dim);
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix g(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = cplx(re, im);
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix &r = qr.matrixQR();
    for (Eigen::Index j = 0; j < d; ++j) {
        const cplx rjj = r(j, j);
        const double a = std::abs(rjj);
        q.col(j) *= (a > 0.0) ? rjj / a : cplx(1.0);
    }
    return DenseUnitary(std::move(q));
}

Rng &IndexedStreams::at(std::size_t j) {
    if (j % kBlock == 0) {
        rng_.seed(derive_seed(seed_, static_cast<std::uint64_t>(j / kBlock)));
    } else if (!started_ || j != next_) {
        throw InvalidArgument("indexed draws must visit a block in order from its start");
    }
    started_ = true;
    next_ = j + 1;
    return rng_;
}

CVector sample_haar_vector(std::size_t dim, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v[i] = cplx(re, im);
    }
    v.normalize();
    return v;
}

DenseUnitary sample_random_clifford(int k, Rng &rng) {
    if (k < 1 || k > 6) {
        throw InvalidArgument("dense Clifford sampling supports 1 <= k <= 6");
    }
    // Images of X_j (even slots) and Z_j (odd slots).
    std::vector<Symp> images(2 * static_cast<std::size_t>(k));
    std::vector<Symp> basis;
    for (int j = 0; j < k; ++j) {
        basis.push_back(Symp{1} << j);       // X_j
        basis.push_back(Symp{1} << (k + j)); // Z_j
    }
    for (int i = 0; i < k; ++i) {
        const std::uint64_t span = std::uint64_t{1} << basis.size();
        std::uniform_int_distribution<std::uint64_t> nonzero(1, span - 1);
        std::uniform_int_distribution<std::uint64_t> any(0, span - 1);
        const Symp v = combine(basis, nonzero(rng));
        Symp w = 0;
        do {
            w = combine(basis, any(rng));
        } while (symplectic_form(v, w, k) != 1);
        images[2 * static_cast<std::size_t>(i)] = v;
        images[2 * static_cast<std::size_t>(i) + 1] = w;
        for (auto &b : basis) {
            Symp y = b;
            if (symplectic_form(b, w, k)) {
                y ^= v;
            }
            if (symplectic_form(b, v, k)) {
                y ^= w;
            }
            b = y;
        }
        basis = symplectic_gram_schmidt(std::move(basis), k);
    }

    std::bernoulli_distribution coin(0.5);
    std::vector<SignedPauli> x_img(static_cast<std::size_t>(k)), z_img(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        const bool sx = coin(rng);
        const bool sz = coin(rng);
        x_img[static_cast<std::size_t>(j)] = {images[2 * static_cast<std::size_t>(j)], sx};
        z_img[static_cast<std::size_t>(j)] = {images[2 * static_cast<std::size_t>(j) + 1], sz};
    }

    const auto d = static_cast<Eigen::Index>(std::uint64_t{1} << k);
    // U|0> is the joint +1 eigenvector of the Z images.
    CVector psi0;
    for (Eigen::Index y = 0; y < d; ++y) {
        CVector v = CVector::Zero(d);
        v[y] = 1.0;
        for (const auto &p : z_img) {
            v = 0.5 * (v + apply_pauli(p, v, k));
        }
        if (v.norm() > 1e-6) {
            psi0 = v.normalized();
            break;
        }
    }
    CMatrix u(d, d);
    for (Eigen::Index x = 0; x < d; ++x) {
        CVector col = psi0;
        for (int j = 0; j < k; ++j) {
            if (x & (Eigen::Index{1} << (k - 1 - j))) {
                col = apply_pauli(x_img[static_cast<std::size_t>(j)], col, k);
            }
        }
        u.col(x) = col;
    }
    return DenseUnitary(std::move(u));
}

PureState stabilizer_product_state(const StabilizerProductLabel &label, const std::vector<int> &qubits,
                                   int n_total) {
    if (label.labels.size() != qubits.size()) {
        throw DimensionMismatch("one stabilizer label per qubit required");
    }
    PureState s = PureState::zero(n_total);
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (label.labels[i] != 0) {
            s = apply_single_qubit(s, qubits[i], stabilizer_preparation(label.labels[i]),
                                   std::max(kDefaultSupportCap, static_cast<int>(qubits.size())));
        }
    }
    // Keep every listed qubit in the active set, even when it stays |0>.
    std::vector<int> sorted = qubits;
    std::sort(sorted.begin(), sorted.end());
    return s.expanded(merge_qubits(s.active(), sorted));
}

std::pair<StabilizerProductLabel, PureState> sample_stabilizer_product(int k, Rng &rng) {
    if (k < 1) {
        throw InvalidArgument("need at least one qubit");
    }
    std::uniform_int_distribution<int> six(0, 5);
    StabilizerProductLabel label;
    label.labels.resize(static_cast<std::size_t>(k));
    for (auto &l : label.labels) {
        l = static_cast<std::uint8_t>(six(rng));
    }
    std::vector<int> qubits(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        qubits[static_cast<std::size_t>(i)] = i;
    }
    PureState s = stabilizer_product_state(label, qubits, k);
    return {std::move(label), std::move(s)};
}

} // namespace bgc

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

#include "bgc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "bgc/random.hpp"

namespace bgc {

namespace {

double sqrt_clamped(double x) { return std::sqrt(std::clamp(x, 0.0, 1.0)); }

void check_same_dim(const DenseUnitary &u, const DenseUnitary &v) {
    if (u.dim() != v.dim()) {
        throw DimensionMismatch("unitaries of dimension " + std::to_string(u.dim()) + " and " +
                                std::to_string(v.dim()));
    }
}

// 1 - |tr(U^dag V)| / d, read off as ||U - e^{i phi} V||_F^2 / (2d) at the
// best phase so that nearly equal unitaries do not cancel to rounding noise.
double trace_gap(const DenseUnitary &u, const DenseUnitary &v) {
    // tr(U^dag V) = sum_ij conj(U_ij) V_ij
    const cplx z = v.matrix().cwiseProduct(u.matrix().conjugate()).sum();
    const double d = static_cast<double>(u.dim());
    if (std::abs(z) < 0.5 * d) {
        return 1.0 - std::abs(z) / d;
    }
    const cplx phase = std::conj(z) / std::abs(z);
    return (u.matrix() - phase * v.matrix()).squaredNorm() / (2.0 * d);
}

} // namespace

double fidelity_pure(const PureState &psi, const PureState &phi) { return std::norm(inner_product(psi, phi)); }

double trace_distance_pure(const PureState &psi, const PureState &phi) {
    const cplx s = inner_product(psi, phi);
    const double a = std::abs(s);
    if (a < 0.5) {
        return sqrt_clamped(1.0 - a * a);
    }
    // 1 - |s| = || psi - e^{i phi} phi ||^2 / 2 at the best phase
    const std::vector<int> region = merge_qubits(psi.active(), phi.active());
    const cplx phase = std::conj(s) / a;
    const double gap =
        (psi.expanded(region).amplitudes() - phase * phi.expanded(region).amplitudes()).squaredNorm() / 2.0;
    return sqrt_clamped(gap * (2.0 - gap));
}

double davg(const DenseUnitary &u, const DenseUnitary &v) {
    check_same_dim(u, v);
    const double d = static_cast<double>(u.dim());
    const double g = trace_gap(u, v);
    // 1 - (d + t^2) / (d (d + 1)) with t = d (1 - g)
    return sqrt_clamped(g * (2.0 * d - d * g) / (d + 1.0));
}

double df_prime(const DenseUnitary &u, const DenseUnitary &v) {
    check_same_dim(u, v);
    return std::sqrt(std::clamp(2.0 * trace_gap(u, v), 0.0, 2.0));
}

std::vector<double> relative_eigenphases(const DenseUnitary &u, const DenseUnitary &v) {
    check_same_dim(u, v);
    const CMatrix w = u.matrix().adjoint() * v.matrix();
    Eigen::ComplexEigenSolver<CMatrix> es(w, false);
    if (es.info() != Eigen::Success) {
        throw InvalidArgument("eigenvalue computation did not converge");
    }
    std::vector<double> phases;
    phases.reserve(static_cast<std::size_t>(w.rows()));
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
        phases.push_back(std::arg(es.eigenvalues()[i]));
    }
    return phases;
}

double minimal_covering_arc(std::vector<double> phases) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (phases.size() <= 1) {
        return 0.0;
    }
    for (auto &p : phases) {
        p = std::fmod(p, two_pi);
        if (p < 0.0) {
            p += two_pi;
        }
    }
    std::sort(phases.begin(), phases.end());
    double max_gap = phases.front() + two_pi - phases.back();
    for (std::size_t i = 1; i < phases.size(); ++i) {
        max_gap = std::max(max_gap, phases[i] - phases[i - 1]);
    }
    return std::max(0.0, two_pi - max_gap);
}

double d2_prime(const DenseUnitary &u, const DenseUnitary &v) {
    const double arc = minimal_covering_arc(relative_eigenphases(u, v));
    return 2.0 * std::sin(arc / 4.0);
}

double diamond_distance(const DenseUnitary &u, const DenseUnitary &v) {
    const double arc = minimal_covering_arc(relative_eigenphases(u, v));
    if (arc >= std::numbers::pi) {
        return 2.0;
    }
    return 2.0 * std::sin(arc / 2.0);
}

double stabilizer_average_overlap(const DenseUnitary &u, const DenseUnitary &v) {
    check_same_dim(u, v);
    const int k = u.num_qubits();
    if (k > 6) {
        throw SupportCapExceeded("stabilizer enumeration limited to 6 qubits");
    }
    const CMatrix w = u.matrix().adjoint() * v.matrix();
    std::vector<CVector> singles;
    for (std::uint8_t l = 0; l < 6; ++l) {
        singles.push_back(stabilizer_preparation(l).col(0));
    }
    std::size_t total = 1;
    for (int i = 0; i < k; ++i) {
        total *= 6;
    }
    double acc = 0.0;
    CVector x(static_cast<Eigen::Index>(u.dim()));
    for (std::size_t code = 0; code < total; ++code) {
        x.setOnes();
        std::size_t c = code;
        for (int q = k - 1; q >= 0; --q) {
            const CVector &s = singles[c % 6];
            c /= 6;
            const Eigen::Index stride = Eigen::Index{1} << (k - 1 - q);
            for (Eigen::Index i = 0; i < x.size(); ++i) {
                x[i] *= s[(i / stride) & 1];
            }
        }
        acc += std::norm(x.dot(w * x));
    }
    return acc / static_cast<double>(total);
}

double dq_exact(const DenseUnitary &u, const DenseUnitary &v) {
    return sqrt_clamped(1.0 - stabilizer_average_overlap(u, v));
}

ChoiState choi_state(const DenseUnitary &u, int support_cap) {
    const int k = u.num_qubits();
    if (2 * k > support_cap) {
        throw SupportCapExceeded("Choi state needs " + std::to_string(2 * k) + " qubits");
    }
    const auto d = static_cast<Eigen::Index>(u.dim());
    CVector amps(d * d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            amps[i * d + j] = u.matrix()(i, j) * s;
        }
    }
    std::vector<int> active(static_cast<std::size_t>(2 * k));
    for (int q = 0; q < 2 * k; ++q) {
        active[static_cast<std::size_t>(q)] = q;
    }
    ChoiState out;
    out.base_dim = u.dim();
    out.state = PureState(std::max(1, 2 * k), std::move(active), std::move(amps));
    return out;
}

Gate4 pauli_pair_rotation() {
    const double r = 1.0 / std::sqrt(2.0);
    const cplx i(0.0, 1.0);
    Gate4 b;
    b << r, 0, 0, r,           //
        0, r, r, 0,            //
        0, i * r, -i * r, 0,   //
        r, 0, 0, -r;
    return b;
}

PureState choi_state_pauli_frame(const DenseUnitary &u, const std::vector<int> &region, int n_qubits,
                                 int support_cap) {
    const int k = u.num_qubits();
    if (static_cast<int>(region.size()) != k) {
        throw DimensionMismatch("region size does not match the unitary");
    }
    if (!std::is_sorted(region.begin(), region.end()) ||
        std::adjacent_find(region.begin(), region.end()) != region.end()) {
        throw InvalidArgument("region must be strictly increasing");
    }
    if (2 * k > support_cap) {
        throw SupportCapExceeded("Choi state needs " + std::to_string(2 * k) + " qubits");
    }
    if (k == 0) {
        return PureState::zero(2 * n_qubits);
    }
    const auto d = static_cast<std::uint64_t>(u.dim());
    // Interleave: system bit of qubit q goes to position 2q, ancilla bit to 2q+1.
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(d * d));
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::uint64_t i = 0; i < d; ++i) {
        for (std::uint64_t j = 0; j < d; ++j) {
            std::uint64_t idx = 0;
            for (int q = 0; q < k; ++q) {
                const std::uint64_t bi = (i >> (k - 1 - q)) & 1U;
                const std::uint64_t bj = (j >> (k - 1 - q)) & 1U;
                idx = (idx << 2) | (bi << 1) | bj;
            }
            amps[static_cast<Eigen::Index>(idx)] =
                u.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * s;
        }
    }
    std::vector<int> active;
    active.reserve(2 * region.size());
    for (int q : region) {
        if (q < 0 || q >= n_qubits) {
            throw DimensionMismatch("region qubit outside the register");
        }
        active.push_back(2 * q);
        active.push_back(2 * q + 1);
    }
    PureState st(2 * n_qubits, active, std::move(amps));
    const Gate4 b = pauli_pair_rotation();
    for (int q : region) {
        st = apply_gate(st, GatePlacement(b, 2 * q, 2 * q + 1), support_cap);
    }
    return compact(st);
}

} // namespace bgc

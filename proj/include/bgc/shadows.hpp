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
 * Classical shadows of pure states on a handful of qubits.
 *
 * A snapshot keeps the measured basis vector v = C^dag |b> alongside the
 * rotation C when C was materialized. Every estimator here only needs v:
 * for O = sum_m lambda_m |u_m><u_m|,
 *
 *   tr(O rho_hat) = sum_m lambda_m (d + 1) |<u_m|v>|^2 - tr(O).
 */
#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bgc/qcore.hpp"

namespace bgc {

enum class ShadowScheme {
    Clifford,
    Haar,
    /// Rotation supplied by the caller.
    Explicit,
};

const char *scheme_name(ShadowScheme scheme);
ShadowScheme parse_scheme(const std::string &name);

struct Snapshot {
    ShadowScheme scheme = ShadowScheme::Haar;
    int k = 0;
    /// Absent when the Haar rotation was sampled implicitly (large k).
    std::optional<DenseUnitary> rotation;
    std::uint64_t outcome = 0;
    /// C^dag |outcome>, over the state's active qubits in order.
    CVector basis_vector;

    [[nodiscard]] std::vector<std::uint8_t> outcome_bits() const;
};

/// Largest k for which a Haar rotation is materialized as a matrix. Beyond it
/// the basis vector is drawn directly from its exact conditional law.
inline constexpr int kDenseRotationLimit = 6;

Snapshot collect_snapshot(const PureState &state, ShadowScheme scheme, Rng &rng,
                          int dense_limit = kDenseRotationLimit);

/// Measures C|psi> in the computational basis for a given rotation C.
Snapshot collect_snapshot_with(const PureState &state, const DenseUnitary &rotation, Rng &rng);

/// Snapshot of a raw amplitude vector (the state on k = log2(dim) qubits).
Snapshot collect_snapshot_vector(const CVector &psi, ShadowScheme scheme, Rng &rng,
                                 int dense_limit = kDenseRotationLimit);

/// Observable in spectral form; eigenvectors need not span the space.
struct LowRankObservable {
    std::vector<std::pair<double, CVector>> eigenpairs;

    [[nodiscard]] double trace() const;
    static LowRankObservable projector(const CVector &v);
};

double estimate_observable(const Snapshot &snapshot, const LowRankObservable &obs);

struct MedianOfMeansConfig {
    std::size_t N = 1;
    std::size_t K = 1;

    [[nodiscard]] std::size_t total() const { return N * K; }

    /// Validates N >= 1, K >= 1 and rounds an even K up.
    static MedianOfMeansConfig make(std::size_t N, std::size_t K);

    /// K = ceil(2 ln(2 M / delta)), N = ceil(c / eps^2) for M observables.
    static MedianOfMeansConfig for_accuracy(double eps, double delta, std::size_t num_observables,
                                            double shadow_constant = 102.0);

    /// Splits a fixed budget of m samples into K batches of floor(m / K).
    static MedianOfMeansConfig for_budget(std::size_t m, std::size_t K);
};

double median_of_means(std::span<const double> values, const MedianOfMeansConfig &cfg);

std::vector<double> estimate_all_candidates(std::span<const Snapshot> snapshots,
                                            std::span<const LowRankObservable> observables,
                                            const MedianOfMeansConfig &cfg);

/// Snapshot j draws from IndexedStreams(seed).at(j), so the result does not
/// depend on how blocks of snapshots are scheduled.
std::vector<Snapshot> collect_snapshots(const PureState &state, ShadowScheme scheme, std::size_t count,
                                        std::uint64_t seed, int dense_limit = kDenseRotationLimit);

/// One text line per snapshot: scheme, k, rotation (or "vector" and the basis
/// vector), outcome bits.
void write_snapshot(std::ostream &out, const Snapshot &snapshot);
Snapshot read_snapshot(std::istream &in);

} // namespace bgc

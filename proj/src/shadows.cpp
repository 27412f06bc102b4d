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

#include "bgc/shadows.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "bgc/circuit_io.hpp"
#include "bgc/random.hpp"

namespace bgc {

const char *scheme_name(ShadowScheme scheme) {
    switch (scheme) {
    case ShadowScheme::Clifford:
        return "clifford";
    case ShadowScheme::Haar:
        return "haar";
    case ShadowScheme::Explicit:
        return "explicit";
    }
    return "?";
}

ShadowScheme parse_scheme(const std::string &name) {
    if (name == "clifford") {
        return ShadowScheme::Clifford;
    }
    if (name == "haar") {
        return ShadowScheme::Haar;
    }
    if (name == "explicit") {
        return ShadowScheme::Explicit;
    }
    throw ParseError("unknown shadow scheme '" + name + "'");
}

std::vector<std::uint8_t> Snapshot::outcome_bits() const {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(k));
    for (int b = 0; b < k; ++b) {
        bits[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>((outcome >> (k - 1 - b)) & 1U);
    }
    return bits;
}

namespace {

std::uint64_t sample_from(const CVector &amps, Rng &rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double r = unif(rng) * amps.squaredNorm();
    double acc = 0.0;
    std::uint64_t last = 0;
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p > 0.0) {
            last = static_cast<std::uint64_t>(i);
        }
        acc += p;
        if (r < acc) {
            return static_cast<std::uint64_t>(i);
        }
    }
    return last;
}

int dim_to_qubits(Eigen::Index dim) {
    int k = 0;
    while ((Eigen::Index{1} << k) < dim) {
        ++k;
    }
    if ((Eigen::Index{1} << k) != dim) {
        throw DimensionMismatch("vector length is not a power of two");
    }
    return k;
}

Snapshot snapshot_from_rotation(const CVector &psi, const DenseUnitary &c, ShadowScheme scheme, Rng &rng) {
    if (static_cast<Eigen::Index>(c.dim()) != psi.size()) {
        throw DimensionMismatch("rotation does not match the state dimension");
    }
    Snapshot s;
    s.scheme = scheme;
    s.k = dim_to_qubits(psi.size());
    const CVector rotated = c.matrix() * psi;
    s.outcome = sample_from(rotated, rng);
    s.basis_vector = c.matrix().row(static_cast<Eigen::Index>(s.outcome)).adjoint();
    s.rotation = c;
    return s;
}

// For Haar C the vector v = C^dag|b> has density d |<v|psi>|^2 relative to the
// uniform measure, so t = |<v|psi>|^2 ~ Beta(2, d - 1) with a uniform phase
// and an orthogonal remainder that is Haar on the complement of psi.
Snapshot direct_haar_snapshot(const CVector &psi, Rng &rng) {
    const Eigen::Index d = psi.size();
    Snapshot s;
    s.scheme = ShadowScheme::Haar;
    s.k = dim_to_qubits(d);
    std::gamma_distribution<double> g2(2.0, 1.0);
    std::gamma_distribution<double> grest(static_cast<double>(d - 1), 1.0);
    const double a = g2(rng);
    const double b = grest(rng);
    const double t = a / (a + b);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    const cplx e = std::polar(1.0, phase(rng));
    CVector xi = sample_haar_vector(static_cast<std::size_t>(d), rng);
    xi -= psi * psi.dot(xi);
    xi.normalize();
    s.basis_vector = std::sqrt(t) * e * psi + std::sqrt(std::max(0.0, 1.0 - t)) * xi;
    s.basis_vector.normalize();
    // The implicit rotation is only defined up to its other rows; the outcome
    // label is uniform by symmetry.
    std::uniform_int_distribution<std::uint64_t> pick(0, static_cast<std::uint64_t>(d - 1));
    s.outcome = pick(rng);
    return s;
}

} // namespace

Snapshot collect_snapshot_vector(const CVector &psi, ShadowScheme scheme, Rng &rng, int dense_limit) {
    const int k = dim_to_qubits(psi.size());
    switch (scheme) {
    case ShadowScheme::Clifford:
        if (k > 6) {
            throw SupportCapExceeded("Clifford shadows are limited to 6 active qubits");
        }
        if (k == 0) {
            return snapshot_from_rotation(psi, DenseUnitary::identity(1), scheme, rng);
        }
        return snapshot_from_rotation(psi, sample_random_clifford(k, rng), scheme, rng);
    case ShadowScheme::Haar:
        if (k > kDefaultSupportCap) {
            throw SupportCapExceeded("Haar shadows are limited to the support cap");
        }
        if (k <= dense_limit) {
            return snapshot_from_rotation(psi, sample_haar_unitary(std::size_t{1} << k, rng), scheme, rng);
        }
        return direct_haar_snapshot(psi, rng);
    case ShadowScheme::Explicit:
        break;
    }
    throw InvalidArgument("explicit scheme needs a rotation; use collect_snapshot_with");
}

Snapshot collect_snapshot(const PureState &state, ShadowScheme scheme, Rng &rng, int dense_limit) {
    return collect_snapshot_vector(state.amplitudes(), scheme, rng, dense_limit);
}

Snapshot collect_snapshot_with(const PureState &state, const DenseUnitary &rotation, Rng &rng) {
    return snapshot_from_rotation(state.amplitudes(), rotation, ShadowScheme::Explicit, rng);
}

double LowRankObservable::trace() const {
    double t = 0.0;
    for (const auto &[lambda, v] : eigenpairs) {
        t += lambda * v.squaredNorm();
    }
    return t;
}

LowRankObservable LowRankObservable::projector(const CVector &v) {
    LowRankObservable o;
    o.eigenpairs.emplace_back(1.0, v);
    return o;
}

double estimate_observable(const Snapshot &snapshot, const LowRankObservable &obs) {
    const double dp1 = static_cast<double>(snapshot.basis_vector.size()) + 1.0;
    double acc = 0.0;
    for (const auto &[lambda, v] : obs.eigenpairs) {
        if (v.size() != snapshot.basis_vector.size()) {
            throw DimensionMismatch("observable and snapshot dimensions differ");
        }
        acc += lambda * dp1 * std::norm(v.dot(snapshot.basis_vector));
    }
    return acc - obs.trace();
}

MedianOfMeansConfig MedianOfMeansConfig::make(std::size_t N, std::size_t K) {
    if (N < 1 || K < 1) {
        throw InvalidArgument("median of means needs N >= 1 and K >= 1");
    }
    if (K % 2 == 0) {
        ++K;
    }
    return {N, K};
}

MedianOfMeansConfig MedianOfMeansConfig::for_accuracy(double eps, double delta, std::size_t num_observables,
                                                      double shadow_constant) {
    if (!(eps > 0.0) || !(delta > 0.0 && delta < 1.0) || num_observables == 0) {
        throw InvalidArgument("need eps > 0, 0 < delta < 1 and at least one observable");
    }
    const double k = std::ceil(2.0 * std::log(2.0 * static_cast<double>(num_observables) / delta));
    const double n = std::ceil(shadow_constant / (eps * eps));
    return make(static_cast<std::size_t>(std::max(1.0, n)), static_cast<std::size_t>(std::max(1.0, k)));
}

MedianOfMeansConfig MedianOfMeansConfig::for_budget(std::size_t m, std::size_t K) {
    if (K % 2 == 0) {
        ++K;
    }
    K = std::min(K, std::max<std::size_t>(m, 1));
    if (K % 2 == 0) {
        --K;
    }
    return make(std::max<std::size_t>(m / K, 1), K);
}

double median_of_means(std::span<const double> values, const MedianOfMeansConfig &cfg) {
    if (cfg.N < 1 || cfg.K < 1) {
        throw InvalidArgument("median of means needs N >= 1 and K >= 1");
    }
    if (values.size() != cfg.N * cfg.K) {
        throw LengthMismatch("expected " + std::to_string(cfg.N * cfg.K) + " values, got " +
                             std::to_string(values.size()));
    }
    std::vector<double> means(cfg.K);
    for (std::size_t b = 0; b < cfg.K; ++b) {
        double s = 0.0;
        for (std::size_t i = 0; i < cfg.N; ++i) {
            s += values[b * cfg.N + i];
        }
        means[b] = s / static_cast<double>(cfg.N);
    }
    const std::size_t mid = cfg.K / 2;
    std::nth_element(means.begin(), means.begin() + static_cast<std::ptrdiff_t>(mid), means.end());
    if (cfg.K % 2 == 1) {
        return means[mid];
    }
    const double hi = means[mid];
    const double lo = *std::max_element(means.begin(), means.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lo + hi);
}

std::vector<double> estimate_all_candidates(std::span<const Snapshot> snapshots,
                                            std::span<const LowRankObservable> observables,
                                            const MedianOfMeansConfig &cfg) {
    std::vector<double> out;
    out.reserve(observables.size());
    std::vector<double> values(snapshots.size());
    for (const auto &obs : observables) {
        for (std::size_t j = 0; j < snapshots.size(); ++j) {
            values[j] = estimate_observable(snapshots[j], obs);
        }
        out.push_back(median_of_means(values, cfg));
    }
    return out;
}

std::vector<Snapshot> collect_snapshots(const PureState &state, ShadowScheme scheme, std::size_t count,
                                        std::uint64_t seed, int dense_limit) {
    std::vector<Snapshot> out;
    out.reserve(count);
    IndexedStreams streams(seed);
    for (std::size_t j = 0; j < count; ++j) {
        Rng &rng = streams.at(j);
        out.push_back(collect_snapshot(state, scheme, rng, dense_limit));
    }
    return out;
}

void write_snapshot(std::ostream &out, const Snapshot &s) {
    out << scheme_name(s.scheme) << ' ' << s.k << ' ';
    if (s.rotation) {
        out << "rotation ";
        write_matrix(out, s.rotation->matrix());
    } else {
        out << "vector " << s.basis_vector.size();
        for (Eigen::Index i = 0; i < s.basis_vector.size(); ++i) {
            out << ' ' << format_complex(s.basis_vector[i]);
        }
    }
    out << ' ';
    for (auto b : s.outcome_bits()) {
        out << static_cast<int>(b);
    }
    if (s.k == 0) {
        out << '-';
    }
    out << '\n';
}

Snapshot read_snapshot(std::istream &in) {
    std::string tag, kind, bits;
    int k = -1;
    if (!(in >> tag >> k >> kind) || k < 0 || k > 62) {
        throw ParseError("malformed snapshot header");
    }
    Snapshot s;
    s.scheme = parse_scheme(tag);
    s.k = k;
    if (kind == "rotation") {
        s.rotation = DenseUnitary(read_matrix(in), 1e-9);
    } else if (kind == "vector") {
        long dim = 0;
        if (!(in >> dim) || dim != (1L << k)) {
            throw ParseError("snapshot vector has the wrong length");
        }
        s.basis_vector.resize(dim);
        std::string tok;
        for (long i = 0; i < dim; ++i) {
            if (!(in >> tok)) {
                throw ParseError("truncated snapshot vector");
            }
            s.basis_vector[i] = parse_complex(tok);
        }
    } else {
        throw ParseError("unknown snapshot payload '" + kind + "'");
    }
    if (!(in >> bits)) {
        throw ParseError("missing snapshot outcome");
    }
    if (k == 0 ? bits != "-" : static_cast<int>(bits.size()) != k) {
        throw ParseError("outcome has the wrong length");
    }
    s.outcome = 0;
    for (int b = 0; b < k; ++b) {
        if (bits[static_cast<std::size_t>(b)] != '0' && bits[static_cast<std::size_t>(b)] != '1') {
            throw ParseError("outcome must be a bit string");
        }
        s.outcome = (s.outcome << 1) | static_cast<std::uint64_t>(bits[static_cast<std::size_t>(b)] - '0');
    }
    if (s.rotation) {
        if (static_cast<int>(s.rotation->dim()) != (1 << k)) {
            throw ParseError("rotation dimension does not match k");
        }
        s.basis_vector = s.rotation->matrix().row(static_cast<Eigen::Index>(s.outcome)).adjoint();
    }
    return s;
}

} // namespace bgc

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

#include "bgc/learners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "bgc/metrics.hpp"
#include "bgc/random.hpp"

namespace bgc {

const char *rule_name(SelectionRule rule) {
    return rule == SelectionRule::OverlapArgmax ? "overlap_argmax" : "helstrom_tournament";
}

SelectionRule parse_rule(const std::string &name) {
    if (name == "overlap_argmax") {
        return SelectionRule::OverlapArgmax;
    }
    if (name == "helstrom_tournament") {
        return SelectionRule::HelstromTournament;
    }
    throw ParseError("unknown selection rule '" + name + "'");
}

void LearnConfig::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw InvalidArgument("epsilon must lie in (0, 1)");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw InvalidArgument("delta must lie in (0, 1)");
    }
    if (!(shadow_constant > 0.0)) {
        throw InvalidArgument("shadow constant must be positive");
    }
    if (mom && (mom->N < 1 || mom->K < 1)) {
        throw InvalidArgument("median of means needs N >= 1 and K >= 1");
    }
}

LowRankObservable HelstromObservable::observable() const {
    LowRankObservable o;
    o.eigenpairs = eigenpairs;
    return o;
}

namespace {

// Geometry of the pair (psi_i, psi_j): s = <psi_i|psi_j>, r = sqrt(1 - |s|^2).
// The positive eigenvector of |psi_i><psi_i| - |psi_j><psi_j| (eigenvalue r)
// is ((r + 1) e1 - conj(s) e2) / sqrt(2r + 2) with e1 = psi_i and
// e2 = (psi_j - s psi_i) / r.
struct PairGeometry {
    cplx s;
    double r;
};

constexpr double kSamePairTol = 1e-12;

PairGeometry pair_geometry(const CVector &a, const CVector &b) {
    const cplx s = a.dot(b);
    return {s, std::sqrt(std::clamp(1.0 - std::norm(s), 0.0, 1.0))};
}

// <u|v> from c_i = <psi_i|v> and c_j = <psi_j|v>.
cplx helstrom_overlap(const PairGeometry &g, cplx ci, cplx cj) {
    const cplx e2 = (cj - std::conj(g.s) * ci) / g.r;
    return ((g.r + 1.0) * ci - g.s * e2) / std::sqrt(2.0 * g.r + 2.0);
}

std::size_t argmax_lowest(const std::vector<double> &x) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (x[i] > x[best]) {
            best = i;
        }
    }
    return best;
}

std::size_t argmin_lowest(const std::vector<double> &x) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (x[i] < x[best]) {
            best = i;
        }
    }
    return best;
}

void check_cap(std::size_t k, int cap, const char *what) {
    if (static_cast<int>(k) > cap) {
        throw SupportCapExceeded(std::string(what) + " needs " + std::to_string(k) + " qubits, cap is " +
                                 std::to_string(cap));
    }
}

std::size_t rounds_for(const LearnConfig &cfg, std::size_t region_size) {
    if (cfg.junta_rounds) {
        return *cfg.junta_rounds;
    }
    const int G = cfg.gate_count > 0 ? cfg.gate_count : static_cast<int>((region_size + 1) / 2);
    return default_junta_rounds(cfg.epsilon, cfg.delta, G);
}

std::vector<int> pair_qubits(const std::vector<int> &region) {
    std::vector<int> out;
    out.reserve(2 * region.size());
    for (int q : region) {
        out.push_back(2 * q);
        out.push_back(2 * q + 1);
    }
    return out;
}

// Postselects `s` onto |0> outside `region`, simulating the measurement: the
// copy survives with the probability of the zero outcome.
std::optional<PureState> postselect_copy(const PureState &s, const std::vector<int> &region, Rng &rng) {
    const std::vector<int> outside = active_outside(s, region);
    if (outside.empty()) {
        return s.expanded(region);
    }
    try {
        PostselectResult ps = postselect_zero(s, outside);
        std::bernoulli_distribution keep(ps.success_prob);
        if (!keep(rng)) {
            return std::nullopt;
        }
        return ps.state.expanded(region);
    } catch (const PostselectionImpossible &) {
        return std::nullopt;
    }
}

std::vector<double> row_estimates(const RowMatrixXd &vals, const MedianOfMeansConfig &mom) {
    std::vector<double> out(static_cast<std::size_t>(vals.rows()));
    for (Eigen::Index i = 0; i < vals.rows(); ++i) {
        out[static_cast<std::size_t>(i)] =
            median_of_means(std::span<const double>(vals.row(i).data(), static_cast<std::size_t>(vals.cols())), mom);
    }
    return out;
}

} // namespace

HelstromObservable helstrom_observable(const PureState &sigma_i, const PureState &sigma_j) {
    if (sigma_i.n_total() != sigma_j.n_total()) {
        throw DimensionMismatch("states on different qubit counts");
    }
    HelstromObservable h;
    h.region = merge_qubits(sigma_i.active(), sigma_j.active());
    const CVector a = sigma_i.expanded(h.region).amplitudes();
    const CVector b = sigma_j.expanded(h.region).amplitudes();
    const PairGeometry g = pair_geometry(a, b);
    if (g.r <= kSamePairTol) {
        return h;
    }
    const CVector e2 = (b - g.s * a) / g.r;
    CVector u = ((g.r + 1.0) * a - std::conj(g.s) * e2) / std::sqrt(2.0 * g.r + 2.0);
    u.normalize();
    h.eigenpairs.emplace_back(1.0, std::move(u));
    h.gap = g.r;
    return h;
}

RowMatrixXd overlap_values(std::span<const CVector> candidates, std::span<const CVector> basis_vectors) {
    RowMatrixXd vals(static_cast<Eigen::Index>(candidates.size()), static_cast<Eigen::Index>(basis_vectors.size()));
    for (std::size_t j = 0; j < basis_vectors.size(); ++j) {
        const CVector &v = basis_vectors[j];
        const double dp1 = static_cast<double>(v.size()) + 1.0;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (candidates[i].size() != v.size()) {
                throw DimensionMismatch("candidate and snapshot dimensions differ");
            }
            vals(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                dp1 * std::norm(candidates[i].dot(v)) - 1.0;
        }
    }
    return vals;
}

RowMatrixXd no_ancilla_values(const std::vector<DenseUnitary> &candidates, const std::vector<int> &net_region,
                              const std::vector<int> &region, std::span<const CVector> inputs,
                              std::span<const CVector> basis_vectors, int support_cap) {
    if (inputs.size() != basis_vectors.size()) {
        throw LengthMismatch("one input per snapshot required");
    }
    // Positions of the net's qubits inside the snapshot region.
    std::vector<int> local;
    for (int q : net_region) {
        auto it = std::lower_bound(region.begin(), region.end(), q);
        if (it == region.end() || *it != q) {
            throw TargetOutsideSubset("net region is not inside the snapshot region");
        }
        local.push_back(static_cast<int>(it - region.begin()));
    }
    std::vector<int> all(region.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = static_cast<int>(i);
    }
    const int k = static_cast<int>(region.size());
    const double dp1 = static_cast<double>(std::size_t{1} << region.size()) + 1.0;
    RowMatrixXd vals(static_cast<Eigen::Index>(candidates.size()), static_cast<Eigen::Index>(basis_vectors.size()));
    for (std::size_t j = 0; j < basis_vectors.size(); ++j) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            CVector ux;
            if (k == 0) {
                ux = candidates[i].matrix() * inputs[j];
            } else {
                const PureState x(k, all, inputs[j]);
                ux = apply_unitary(x, candidates[i], local, support_cap).expanded(all).amplitudes();
            }
            vals(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                dp1 * std::norm(ux.dot(basis_vectors[j])) - 1.0;
        }
    }
    return vals;
}

SelectionScores select_from_snapshots(std::span<const CVector> candidates, std::span<const CVector> basis_vectors,
                                      SelectionRule rule, const MedianOfMeansConfig &mom) {
    if (candidates.empty()) {
        throw EmptyNet("no candidates to select from");
    }
    SelectionScores out;
    if (rule == SelectionRule::OverlapArgmax) {
        out.scores = row_estimates(overlap_values(candidates, basis_vectors), mom);
        out.index = argmax_lowest(out.scores);
        return out;
    }
    const std::size_t M = candidates.size();
    const std::size_t S = basis_vectors.size();
    if (S != mom.total()) {
        throw LengthMismatch("snapshot count does not match the median-of-means budget");
    }
    // c(i, j) = <psi_i|v_j>
    Eigen::MatrixXcd c(static_cast<Eigen::Index>(M), static_cast<Eigen::Index>(S));
    for (std::size_t j = 0; j < S; ++j) {
        for (std::size_t i = 0; i < M; ++i) {
            c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = candidates[i].dot(basis_vectors[j]);
        }
    }
    out.scores.assign(M, 0.0);
    std::vector<double> vals(S);
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t k = 0; k < M; ++k) {
            if (k == i) {
                continue;
            }
            const PairGeometry g = pair_geometry(candidates[i], candidates[k]);
            if (g.r <= kSamePairTol) {
                continue;
            }
            for (std::size_t j = 0; j < S; ++j) {
                const double dp1 = static_cast<double>(basis_vectors[j].size()) + 1.0;
                const cplx o = helstrom_overlap(g, c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)),
                                                c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)));
                vals[j] = dp1 * std::norm(o) - 1.0;
            }
            const double est = median_of_means(vals, mom);
            const double expected = (g.r + 1.0) / 2.0;
            out.scores[i] = std::max(out.scores[i], std::abs(expected - est));
        }
    }
    out.index = argmin_lowest(out.scores);
    return out;
}

std::vector<std::size_t> tournament_prefix_indices(std::span<const CVector> candidates,
                                                   std::span<const CVector> basis_vectors,
                                                   std::span<const int> prefix_lengths) {
    if (candidates.empty()) {
        throw EmptyNet("no candidates to select from");
    }
    const auto M = static_cast<Eigen::Index>(candidates.size());
    const auto S = static_cast<Eigen::Index>(basis_vectors.size());
    const auto P = static_cast<Eigen::Index>(prefix_lengths.size());
    for (int n : prefix_lengths) {
        if (n < 1 || n > S) {
            throw LengthMismatch("prefix length outside the snapshot pool");
        }
    }
    if (S == 0 || P == 0) {
        return std::vector<std::size_t>(static_cast<std::size_t>(P), 0);
    }
    const auto d = candidates[0].size();
    Eigen::MatrixXcd cand(d, M), snaps(d, S);
    for (Eigen::Index i = 0; i < M; ++i) {
        cand.col(i) = candidates[static_cast<std::size_t>(i)];
    }
    for (Eigen::Index j = 0; j < S; ++j) {
        snaps.col(j) = basis_vectors[static_cast<std::size_t>(j)];
    }
    const Eigen::MatrixXcd gram = cand.adjoint() * cand;
    using RowMatrixXcd = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const RowMatrixXcd c = cand.adjoint() * snaps;
    const double dp1 = static_cast<double>(d) + 1.0;
    Eigen::ArrayXd inv_n(P);
    for (Eigen::Index p = 0; p < P; ++p) {
        inv_n(p) = 1.0 / prefix_lengths[static_cast<std::size_t>(p)];
    }

    // Opponents in decreasing order of estimated overlap, so that a wrong
    // candidate meets the target early and can be discarded.
    const Eigen::ArrayXd overlap = (dp1 * c.cwiseAbs2().array() - 1.0).rowwise().mean();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(M));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&overlap](Eigen::Index a, Eigen::Index b) { return overlap(a) > overlap(b); });

    Eigen::ArrayXd vals(S), prefix(S), dev(P);
    // Worst deviation of candidate i at every prefix; stops early once every
    // entry exceeds `bound`, since i can then never be selected.
    auto score = [&](Eigen::Index i, const Eigen::ArrayXd *bound) {
        Eigen::ArrayXd sc = Eigen::ArrayXd::Zero(P);
        for (Eigen::Index k : order) {
            if (k == i) {
                continue;
            }
            const cplx sv = gram(i, k);
            const double r = std::sqrt(std::clamp(1.0 - std::norm(sv), 0.0, 1.0));
            if (r <= kSamePairTol) {
                continue;
            }
            // helstrom_overlap expanded: <u|v> = alpha c_i + beta c_k.
            const double norm = std::sqrt(2.0 * r + 2.0);
            const double alpha = (r + 1.0 + std::norm(sv) / r) / norm;
            const cplx beta = -sv / (r * norm);
            vals = dp1 * (alpha * c.row(i).array() + beta * c.row(k).array()).abs2() - 1.0;
            double acc = 0.0;
            for (Eigen::Index j = 0; j < S; ++j) {
                acc += vals(j);
                prefix(j) = acc;
            }
            const double expected = (r + 1.0) / 2.0;
            for (Eigen::Index p = 0; p < P; ++p) {
                dev(p) = std::abs(expected - prefix(prefix_lengths[static_cast<std::size_t>(p)] - 1) * inv_n(p));
            }
            sc = sc.max(dev);
            if (bound != nullptr && (sc > *bound).all()) {
                break;
            }
        }
        return sc;
    };

    Eigen::MatrixXd scores(P, M);
    std::vector<bool> done(static_cast<std::size_t>(M), false);
    Eigen::ArrayXd best = Eigen::ArrayXd::Constant(P, std::numeric_limits<double>::infinity());
    const Eigen::Index first = order.front();
    scores.col(first) = score(first, nullptr).matrix();
    best = scores.col(first).array();
    done[static_cast<std::size_t>(first)] = true;
    for (Eigen::Index i = 0; i < M; ++i) {
        if (!done[static_cast<std::size_t>(i)]) {
            scores.col(i) = score(i, &best).matrix();
            best = best.min(scores.col(i).array());
        }
    }
    std::vector<std::size_t> out(static_cast<std::size_t>(P));
    for (Eigen::Index p = 0; p < P; ++p) {
        Eigen::Index arg = 0;
        for (Eigen::Index i = 1; i < M; ++i) {
            if (scores(p, i) < scores(p, arg)) {
                arg = i;
            }
        }
        out[static_cast<std::size_t>(p)] = static_cast<std::size_t>(arg);
    }
    return out;
}

MedianOfMeansConfig selection_budget(const LearnConfig &cfg, std::size_t num_candidates) {
    if (cfg.mom) {
        return MedianOfMeansConfig::make(cfg.mom->N, cfg.mom->K);
    }
    if (cfg.rule == SelectionRule::OverlapArgmax) {
        return MedianOfMeansConfig::for_accuracy(cfg.epsilon * cfg.epsilon / 2.0, cfg.delta, num_candidates,
                                                 cfg.shadow_constant);
    }
    const std::size_t pairs = std::max<std::size_t>(num_candidates * (num_candidates - 1), 1);
    return MedianOfMeansConfig::for_accuracy(cfg.epsilon / 2.0, cfg.delta, pairs, cfg.shadow_constant);
}

LearnResult select_by_shadows(const std::function<PureState()> &copy, const std::vector<PureState> &candidates,
                              const std::vector<int> &region, const LearnConfig &cfg, Rng &rng) {
    cfg.validate();
    if (candidates.empty()) {
        throw EmptyNet("no candidates to select from");
    }
    check_cap(region.size(), cfg.support_cap, "snapshot region");
    std::vector<CVector> cand_vecs;
    cand_vecs.reserve(candidates.size());
    for (const auto &c : candidates) {
        cand_vecs.push_back(c.expanded(region).amplitudes());
    }
    MedianOfMeansConfig mom = selection_budget(cfg, candidates.size());
    const std::size_t m = mom.total();
    IndexedStreams streams(rng());
    LearnResult res;
    res.region = region;
    std::vector<CVector> vs;
    vs.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        Rng &r = streams.at(j);
        auto s = postselect_copy(copy(), region, r);
        if (!s) {
            ++res.postselection_failures;
            continue;
        }
        vs.push_back(collect_snapshot(*s, cfg.scheme, r, cfg.dense_limit).basis_vector);
    }
    res.snapshots = vs.size();
    if (vs.empty()) {
        res.scores.assign(candidates.size(), 0.0);
        return res;
    }
    if (vs.size() < m) {
        mom = MedianOfMeansConfig::for_budget(vs.size(), mom.K);
        vs.resize(mom.total());
    }
    SelectionScores sel = select_from_snapshots(cand_vecs, vs, cfg.rule, mom);
    res.index = sel.index;
    res.scores = std::move(sel.scores);
    return res;
}

LearnResult learn_state(StateOracle &oracle, const CandidateNet &net, const LearnConfig &cfg, Rng &rng) {
    cfg.validate();
    if (net.empty()) {
        throw EmptyNet("cannot learn from an empty net");
    }
    const std::size_t start = oracle.copies_used();
    const std::vector<int> &w = net.region();
    SupportEstimate sup;
    std::vector<int> region = w;
    const std::size_t rounds = rounds_for(cfg, w.size());
    auto copy = [&oracle] { return oracle.copy(); };
    if (rounds > 0) {
        sup = identify_support_state(copy, oracle.n_qubits(), rounds, rng);
        region = merge_qubits(w, sup.support);
    } else {
        sup.support = w;
    }
    LearnResult res = select_by_shadows(copy, net.states(), region, cfg, rng);
    res.support = std::move(sup);
    if (net.has_circuits()) {
        res.circuit = net.circuit(res.index);
    }
    res.queries = oracle.copies_used() - start;
    return res;
}

LearnResult learn_unitary_no_ancilla(UnitaryOracle &oracle, const CandidateNet &net, const LearnConfig &cfg,
                                     Rng &rng) {
    cfg.validate();
    if (net.empty()) {
        throw EmptyNet("cannot learn from an empty net");
    }
    if (net.mode() != NetMode::Unitary) {
        throw InvalidArgument("unitary learning needs a unitary-mode net");
    }
    const std::size_t start = oracle.queries_used();
    const std::vector<int> &w = net.region();
    SupportEstimate sup;
    std::vector<int> region = w;
    const std::size_t rounds = rounds_for(cfg, w.size());
    if (rounds > 0) {
        sup = identify_support_unitary(oracle, rounds, rng);
        region = merge_qubits(w, sup.support);
    } else {
        sup.support = w;
    }
    check_cap(region.size(), cfg.support_cap, "snapshot region");
    MedianOfMeansConfig mom = cfg.mom ? MedianOfMeansConfig::make(cfg.mom->N, cfg.mom->K)
                                      : MedianOfMeansConfig::for_accuracy(cfg.epsilon * cfg.epsilon / 8.0, cfg.delta,
                                                                          net.size(), cfg.shadow_constant);
    const std::size_t m = mom.total();
    IndexedStreams streams(rng());
    LearnResult res;
    res.region = region;
    std::vector<CVector> inputs, vs;
    for (std::size_t j = 0; j < m; ++j) {
        Rng &r = streams.at(j);
        const ProductFrame frame(r());
        PureState s = frame.prepare(oracle.apply_conjugated(frame), region, cfg.support_cap);
        auto kept = postselect_copy(s, region, r);
        if (!kept) {
            ++res.postselection_failures;
            continue;
        }
        vs.push_back(collect_snapshot(*kept, cfg.scheme, r, cfg.dense_limit).basis_vector);
        inputs.push_back(frame.product_vector(region));
    }
    res.snapshots = vs.size();
    res.queries = oracle.queries_used() - start;
    res.support = std::move(sup);
    if (vs.empty()) {
        res.scores.assign(net.size(), 0.0);
        return res;
    }
    if (vs.size() < m) {
        mom = MedianOfMeansConfig::for_budget(vs.size(), mom.K);
        vs.resize(mom.total());
        inputs.resize(mom.total());
    }
    const RowMatrixXd vals = no_ancilla_values(net.unitaries(), w, region, inputs, vs, cfg.support_cap);
    res.scores = row_estimates(vals, mom);
    res.index = argmax_lowest(res.scores);
    if (net.has_circuits()) {
        res.circuit = net.circuit(res.index);
    }
    return res;
}

LearnResult learn_choi_states(const std::function<PureState()> &choi_copy, int n,
                              const std::vector<DenseUnitary> &candidates, const std::vector<int> &region,
                              const LearnConfig &cfg, Rng &rng) {
    cfg.validate();
    if (candidates.empty()) {
        throw EmptyNet("cannot learn from an empty net");
    }
    SupportEstimate sup;
    std::vector<int> full = region;
    const std::size_t rounds = rounds_for(cfg, region.size());
    if (rounds > 0) {
        sup = identify_support_choi(choi_copy, n, rounds, rng);
        full = merge_qubits(region, sup.support);
    } else {
        sup.support = region;
    }
    check_cap(2 * full.size(), cfg.support_cap, "Choi snapshot region");
    std::vector<PureState> choi;
    choi.reserve(candidates.size());
    for (const auto &u : candidates) {
        choi.push_back(choi_state_pauli_frame(u, region, n, cfg.support_cap));
    }
    LearnResult res = select_by_shadows(choi_copy, choi, pair_qubits(full), cfg, rng);
    res.support = std::move(sup);
    return res;
}

LearnResult learn_unitary_choi(UnitaryOracle &oracle, const CandidateNet &net, const LearnConfig &cfg, Rng &rng) {
    if (net.empty()) {
        throw EmptyNet("cannot learn from an empty net");
    }
    if (net.mode() != NetMode::Unitary) {
        throw InvalidArgument("unitary learning needs a unitary-mode net");
    }
    const std::size_t start = oracle.queries_used();
    LearnResult res = learn_choi_states([&oracle] { return oracle.choi_copy(); }, oracle.n_qubits(), net.unitaries(),
                                        net.region(), cfg, rng);
    if (net.has_circuits()) {
        res.circuit = net.circuit(res.index);
    }
    res.queries = oracle.queries_used() - start;
    return res;
}

DenseUnitary matrix_power_root(const DenseUnitary &u, double exponent) {
    if (!std::isfinite(exponent)) {
        throw InvalidArgument("exponent must be finite");
    }
    Eigen::ComplexSchur<CMatrix> schur(u.matrix());
    if (schur.info() != Eigen::Success) {
        throw EigRootFailure("Schur decomposition did not converge");
    }
    const CMatrix &t = schur.matrixT();
    const CMatrix &q = schur.matrixU();
    const double off = t.triangularView<Eigen::StrictlyUpper>().toDenseMatrix().cwiseAbs().maxCoeff();
    if (t.rows() > 1 && off > 1e-8) {
        throw EigRootFailure("Schur form of a unitary is not diagonal (off-diagonal " + std::to_string(off) + ")");
    }
    CVector d(t.rows());
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
        double theta = std::arg(t(i, i));
        if (theta <= -std::numbers::pi) {
            theta = std::numbers::pi;
        }
        d[i] = std::polar(1.0, theta * exponent);
    }
    CMatrix r = q * d.asDiagonal() * q.adjoint();
    try {
        return DenseUnitary(std::move(r), 1e-9);
    } catch (const InvalidArgument &e) {
        throw EigRootFailure(e.what());
    }
}

} // namespace bgc

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

#include "bgc/harness/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <thread>
#include <tuple>

#include "bgc/junta.hpp"
#include "bgc/metrics.hpp"
#include "bgc/random.hpp"
#include "bgc/oracles.hpp"

namespace bgc {

namespace {

constexpr int kPlacementAttempts = 1000;

/// Largest snapshot region each mode can handle under the support cap.
int region_limit(const SweepConfig &cfg) {
    switch (cfg.mode) {
    case SweepMode::State:
        return cfg.support_cap;
    case SweepMode::UnitaryChoi:
        return std::min(cfg.support_cap / 2, 12);
    case SweepMode::UnitaryNoAncilla:
        return std::min(cfg.support_cap, 12);
    }
    return cfg.support_cap;
}

std::size_t support_size(const Configuration &placement) {
    std::vector<int> qs;
    for (const auto &[a, b] : placement) {
        qs.push_back(a);
        qs.push_back(b);
    }
    std::sort(qs.begin(), qs.end());
    return static_cast<std::size_t>(std::unique(qs.begin(), qs.end()) - qs.begin());
}

std::size_t argmax_lowest(const Eigen::VectorXd &x) {
    std::size_t best = 0;
    for (Eigen::Index i = 1; i < x.size(); ++i) {
        if (x(i) > x(static_cast<Eigen::Index>(best))) {
            best = static_cast<std::size_t>(i);
        }
    }
    return best;
}

/// Rows are the flattened matrix, so <choi(U)|v> is a Frobenius product.
CVector choi_vector(const CMatrix &u) {
    const auto d = u.rows();
    CVector out(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            out(i * d + j) = u(i, j);
        }
    }
    return out / std::sqrt(static_cast<double>(d));
}

double unitary_fidelity(const CMatrix &a, const CMatrix &b) {
    const double d = static_cast<double>(a.rows());
    return std::min(1.0, std::norm((a.adjoint() * b).trace()) / (d * d));
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

std::uint64_t trial_seed(const SweepConfig &cfg, int G, int trial) {
    return derive_seed(cfg.trial_seed_base, static_cast<std::uint64_t>(cfg.sweep_case), static_cast<std::uint64_t>(G),
                       static_cast<std::uint64_t>(trial));
}

Configuration sample_placement(const SweepConfig &cfg, int G, Rng &rng) {
    const int span = cfg.sweep_case == SweepCase::Concentrated ? cfg.concentrated_qubits : cfg.n_total;
    std::uniform_int_distribution<int> pick(0, span - 2);
    Configuration placement;
    for (int i = 0; i < G; ++i) {
        const int q = pick(rng);
        placement.emplace_back(q, q + 1);
    }
    return placement;
}

std::vector<double> run_trial(const SweepConfig &cfg, int G, int trial) {
    const std::uint64_t seed = trial_seed(cfg, G, trial);
    Rng rng(seed);
    Rng gate_rng(cfg.fixed_gate_set ? derive_seed(cfg.gate_set_seed)
                                    : derive_seed(cfg.gate_set_seed, static_cast<std::uint64_t>(trial)));
    const GateSet gates = GateSet::haar(cfg.gate_set_size, gate_rng);

    const int limit = region_limit(cfg);
    Configuration placement;
    for (int attempt = 0;; ++attempt) {
        if (attempt == kPlacementAttempts) {
            throw SupportCapExceeded("no placement of " + std::to_string(G) + " gates fits in " +
                                     std::to_string(limit) + " qubits");
        }
        placement = sample_placement(cfg, G, rng);
        if (static_cast<int>(support_size(placement)) <= limit) {
            break;
        }
    }
    const NetMode net_mode = cfg.mode == SweepMode::State ? NetMode::State : NetMode::Unitary;
    const CandidateNet net =
        enumerate_net(gates, {placement}, G, net_mode, cfg.n_total, kDefaultEnumerationCap, cfg.support_cap);
    const std::size_t M = net.size();
    const std::size_t truth = std::uniform_int_distribution<std::size_t>(0, M - 1)(rng);

    std::vector<double> fid(M);
    for (std::size_t i = 0; i < M; ++i) {
        fid[i] = cfg.mode == SweepMode::State
                     ? std::clamp(fidelity_pure(net.state(truth), net.state(i)), 0.0, 1.0)
                     : unitary_fidelity(net.unitary(truth).matrix(), net.unitary(i).matrix());
    }
    if (M == 1) {
        return std::vector<double>(cfg.N_range.size(), fid[0]);
    }

    const int max_n = *std::max_element(cfg.N_range.begin(), cfg.N_range.end());
    IndexedStreams streams(rng());
    std::vector<int> region = net.region();
    std::vector<CVector> cands, vs;
    RowMatrixXd vals;
    switch (cfg.mode) {
    case SweepMode::State: {
        if (cfg.junta_rounds > 0) {
            const PureState &target = net.state(truth);
            const auto sup = identify_support_state([&target] { return target; }, cfg.n_total, cfg.junta_rounds, rng);
            region = merge_qubits(region, sup.support);
        }
        for (std::size_t i = 0; i < M; ++i) {
            cands.push_back(net.state(i).expanded(region).amplitudes());
        }
        const CVector &t = cands[truth];
        for (int j = 0; j < max_n; ++j) {
            Rng &r = streams.at(static_cast<std::size_t>(j));
            vs.push_back(collect_snapshot_vector(t, cfg.scheme, r, cfg.dense_limit).basis_vector);
        }
        vals = overlap_values(cands, vs);
        break;
    }
    case SweepMode::UnitaryChoi: {
        const CVector t = choi_vector(net.unitary(truth).matrix());
        const double big_d = static_cast<double>(t.size());
        const auto d = net.unitary(truth).matrix().rows();
        vals.resize(static_cast<Eigen::Index>(M), max_n);
        for (int j = 0; j < max_n; ++j) {
            Rng &r = streams.at(static_cast<std::size_t>(j));
            const CVector v = collect_snapshot_vector(t, cfg.scheme, r, cfg.dense_limit).basis_vector;
            const Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> vm(
                v.data(), d, d);
            for (std::size_t i = 0; i < M; ++i) {
                const cplx c = (net.unitary(i).matrix().conjugate().cwiseProduct(vm)).sum() /
                               std::sqrt(static_cast<double>(d));
                vals(static_cast<Eigen::Index>(i), j) = (big_d + 1.0) * std::norm(c) - 1.0;
            }
        }
        break;
    }
    case SweepMode::UnitaryNoAncilla: {
        std::vector<CVector> inputs;
        const CMatrix &u = net.unitary(truth).matrix();
        for (int j = 0; j < max_n; ++j) {
            Rng &r = streams.at(static_cast<std::size_t>(j));
            const ProductFrame frame(r());
            inputs.push_back(frame.product_vector(region));
            const CVector out = u * inputs.back();
            vs.push_back(collect_snapshot_vector(out, cfg.scheme, r, cfg.dense_limit).basis_vector);
        }
        vals = no_ancilla_values(net.unitaries(), region, region, inputs, vs, cfg.support_cap);
        break;
    }
    }

    RowMatrixXd prefix = RowMatrixXd::Zero(vals.rows(), max_n + 1);
    for (int j = 0; j < max_n; ++j) {
        prefix.col(j + 1) = prefix.col(j) + vals.col(j);
    }
    std::vector<double> out;
    out.reserve(cfg.N_range.size());
    const std::size_t K = cfg.mom_batches;
    if (cfg.selection_rule() == SelectionRule::HelstromTournament && K == 1) {
        for (std::size_t pick : tournament_prefix_indices(cands, vs, cfg.N_range)) {
            out.push_back(fid[pick]);
        }
        return out;
    }
    for (int N : cfg.N_range) {
        const auto n = static_cast<std::size_t>(N);
        const MedianOfMeansConfig mom =
            K > 1 && n >= K ? MedianOfMeansConfig::for_budget(n, K) : MedianOfMeansConfig::make(n, 1);
        std::size_t pick = 0;
        if (cfg.selection_rule() == SelectionRule::HelstromTournament) {
            const std::span<const CVector> head(vs.data(), mom.total());
            pick = select_from_snapshots(cands, head, cfg.selection_rule(), mom).index;
        } else if (mom.K == 1) {
            pick = argmax_lowest(prefix.col(N));
        } else {
            Eigen::VectorXd est(vals.rows());
            for (Eigen::Index i = 0; i < vals.rows(); ++i) {
                est(i) = median_of_means(std::span<const double>(vals.row(i).data(), mom.total()), mom);
            }
            pick = argmax_lowest(est);
        }
        out.push_back(fid[pick]);
    }
    return out;
}

SweepResult run_sweep(const SweepConfig &cfg) {
    cfg.validate();
    const std::size_t tasks = cfg.G_range.size() * static_cast<std::size_t>(cfg.trials);
    std::vector<std::vector<double>> results(tasks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t task = next.fetch_add(1);
            if (task >= tasks) {
                return;
            }
            const int G = cfg.G_range[task / static_cast<std::size_t>(cfg.trials)];
            const int trial = static_cast<int>(task % static_cast<std::size_t>(cfg.trials));
            try {
                results[task] = run_trial(cfg, G, trial);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(tasks);
                return;
            }
        }
    };
    const int nthreads =
        std::min<int>(effective_threads(cfg.threads), static_cast<int>(std::max<std::size_t>(tasks, 1)));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    SweepResult result;
    result.records.reserve(tasks * cfg.N_range.size());
    for (std::size_t task = 0; task < tasks; ++task) {
        const int G = cfg.G_range[task / static_cast<std::size_t>(cfg.trials)];
        const int trial = static_cast<int>(task % static_cast<std::size_t>(cfg.trials));
        for (std::size_t k = 0; k < cfg.N_range.size(); ++k) {
            result.records.push_back({G, cfg.N_range[k], trial, results[task][k]});
        }
    }
    std::stable_sort(result.records.begin(), result.records.end(), [](const SweepRecord &a, const SweepRecord &b) {
        return std::tie(a.G, a.N, a.trial) < std::tie(b.G, b.N, b.trial);
    });
    summarize(result, cfg.fidelity_thresholds);
    return result;
}

void summarize(SweepResult &result, const std::vector<double> &thresholds) {
    std::map<std::pair<int, int>, std::vector<double>> groups;
    for (const auto &r : result.records) {
        groups[{r.G, r.N}].push_back(r.fidelity);
    }
    result.summaries.clear();
    std::map<int, std::vector<const SweepSummary *>> by_g;
    result.summaries.reserve(groups.size());
    for (auto &[key, f] : groups) {
        double sum = 0.0;
        for (double x : f) {
            sum += x;
        }
        result.summaries.push_back({key.first, key.second, sum / static_cast<double>(f.size()), median_of(f)});
    }
    for (const auto &s : result.summaries) {
        by_g[s.G].push_back(&s);
    }
    result.curves.clear();
    for (const auto &[G, rows] : by_g) {
        for (double thr : thresholds) {
            SampleComplexity sc{G, thr, std::nullopt, std::nullopt};
            bool med_ok = true;
            bool mean_ok = true;
            for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
                med_ok = med_ok && (*it)->median_fidelity >= thr;
                mean_ok = mean_ok && (*it)->mean_fidelity >= thr;
                if (med_ok) {
                    sc.n_star_median = (*it)->N;
                }
                if (mean_ok) {
                    sc.n_star_mean = (*it)->N;
                }
            }
            result.curves.push_back(sc);
        }
    }
}

} // namespace bgc

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

#include "bgc/bootstrap.hpp"

#include <cmath>
#include <numbers>

#include "bgc/metrics.hpp"

namespace bgc {

int bootstrap_iterations(double epsilon, std::size_t dim) {
    const double s = std::sqrt(static_cast<double>(dim));
    if (!(epsilon > 0.0) || !(epsilon < 1.0 / s)) {
        throw InvalidRegime("bootstrap needs 0 < eps < 1/sqrt(d)");
    }
    return static_cast<int>(std::ceil(std::log2(1.0 / (epsilon * s)) - 1e-12));
}

double bootstrap_eta(int j, int t, double delta) { return std::pow(8.0, j - t - 1) * delta; }

DenseUnitary centre_phases(const DenseUnitary &u) {
    std::vector<double> phases = relative_eigenphases(DenseUnitary::identity(u.dim()), u);
    if (phases.size() <= 1) {
        return u;
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (auto &p : phases) {
        if (p < 0.0) {
            p += two_pi;
        }
    }
    std::sort(phases.begin(), phases.end());
    // The covering arc starts right after the widest gap.
    std::size_t start = 0;
    double widest = phases.front() + two_pi - phases.back();
    for (std::size_t i = 1; i < phases.size(); ++i) {
        if (phases[i] - phases[i - 1] > widest) {
            widest = phases[i] - phases[i - 1];
            start = i;
        }
    }
    const double arc = two_pi - widest;
    const double centre = phases[start] + arc / 2.0;
    return DenseUnitary(u.matrix() * std::polar(1.0, -centre), 1e-9);
}

namespace {

DenseUnitary power(const DenseUnitary &u, long long p) {
    CMatrix acc = CMatrix::Identity(static_cast<Eigen::Index>(u.dim()), static_cast<Eigen::Index>(u.dim()));
    for (long long i = 0; i < p; ++i) {
        acc = u.matrix() * acc;
    }
    return DenseUnitary(std::move(acc), 1e-8);
}

} // namespace

BootstrapResult bootstrap_learn(UnitaryOracle &oracle, const CandidateNet &net, const LearnConfig &cfg,
                                const BootstrapOptions &options, Rng &rng) {
    cfg.validate();
    if (net.empty()) {
        throw EmptyNet("cannot bootstrap from an empty net");
    }
    if (net.mode() != NetMode::Unitary) {
        throw InvalidArgument("bootstrap needs a unitary-mode net");
    }
    const std::vector<int> &region = net.region();
    const std::size_t dim = std::size_t{1} << region.size();
    if (dim > 8) {
        throw InvalidArgument("bootstrap is limited to d <= 8");
    }
    BootstrapResult res;
    res.t = bootstrap_iterations(cfg.epsilon, dim);
    const std::size_t start = oracle.queries_used();
    const DenseUnitary truth = oracle.reveal_unitary(region);
    DenseUnitary v = DenseUnitary::identity(dim);
    res.errors.push_back(df_prime(truth, v));
    const double inner_eps = options.inner_epsilon.value_or(1.0 / (25000.0 * std::sqrt(static_cast<double>(dim))));
    for (int j = 0; j <= res.t; ++j) {
        BootstrapStep step;
        step.j = j;
        step.p = 1LL << j;
        step.eta = bootstrap_eta(j, res.t, cfg.delta);
        const DenseUnitary v_dag = v.adjoint();
        std::vector<DenseUnitary> candidates;
        candidates.reserve(net.size());
        for (const auto &u : net.unitaries()) {
            candidates.push_back(power(u * v_dag, step.p));
        }
        const DenseUnitary target = power(truth * v_dag, step.p);
        if (options.exact_selection) {
            std::vector<double> dist(candidates.size());
            std::size_t nearest = 0;
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                dist[i] = davg(candidates[i], target);
                if (dist[i] < dist[nearest]) {
                    nearest = i;
                }
            }
            step.selected = nearest;
            if (options.adversarial_accuracy) {
                double worst = -1.0;
                for (std::size_t i = 0; i < candidates.size(); ++i) {
                    if (dist[i] <= *options.adversarial_accuracy && dist[i] > worst) {
                        worst = dist[i];
                        step.selected = i;
                    }
                }
            }
            oracle.choi_copy_powered(v_dag, region, static_cast<int>(step.p));
        } else {
            LearnConfig inner = cfg;
            inner.epsilon = std::min(inner_eps, 0.999);
            inner.delta = step.eta;
            const LearnResult lr = learn_choi_states(
                [&] { return oracle.choi_copy_powered(v_dag, region, static_cast<int>(step.p)); }, oracle.n_qubits(),
                candidates, region, inner, rng);
            step.selected = lr.index;
        }
        step.selection_error = davg(candidates[step.selected], target);
        const DenseUnitary root =
            matrix_power_root(centre_phases(candidates[step.selected]), 1.0 / static_cast<double>(step.p));
        v = root * v;
        res.errors.push_back(df_prime(truth, v));
        res.steps.push_back(step);
    }
    res.estimate = v;
    res.queries = oracle.queries_used() - start;
    return res;
}

} // namespace bgc

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

// Acceptance suite: one PASS or FAIL line per criterion. Pass criterion
// numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>

#include "bgc/bootstrap.hpp"
#include "bgc/classical_data.hpp"
#include "bgc/error.hpp"
#include "bgc/harness/export.hpp"
#include "bgc/harness/sweep.hpp"
#include "bgc/junta.hpp"
#include "bgc/learners.hpp"
#include "bgc/metrics.hpp"
#include "bgc/random.hpp"
#include "bgc/shadows.hpp"
#include "test_util.hpp"

namespace {

using namespace bgc;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x, int digits = 4) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

// ---------------------------------------------------------------- 1 and 2

const SweepResult &case_a_sweep() {
    static const SweepResult result = [] {
        SweepConfig cfg;
        cfg.sweep_case = SweepCase::Concentrated;
        cfg.n_total = 10000;
        cfg.trials = 1000;
        return run_sweep(cfg);
    }();
    return result;
}

std::string curve_text(const SweepResult &r) {
    std::string s;
    for (const auto &c : r.curves) {
        s += (s.empty() ? "" : " ") + std::to_string(c.G) + ":" +
             (c.n_star_median ? std::to_string(*c.n_star_median) : std::string("none"));
    }
    return s;
}

Outcome criterion_1() {
    const SweepResult &r = case_a_sweep();
    bool ok = true;
    std::optional<int> prev;
    for (const auto &c : r.curves) {
        if (!c.n_star_median) {
            ok = false;
            continue;
        }
        if (prev && *c.n_star_median < *prev) {
            ok = false;
        }
        prev = c.n_star_median;
    }
    const auto &last = r.curves.back();
    const bool bounded = last.G == 10 && last.n_star_median && *last.n_star_median <= 100;
    const bool near_50 = bounded && *last.n_star_median >= 25 && *last.n_star_median <= 100;
    return {ok && bounded && near_50, "N*(median >= 0.999) by G: " + curve_text(r)};
}

Outcome criterion_2() {
    const SweepResult &r = case_a_sweep();
    std::vector<double> x, y;
    for (const auto &c : r.curves) {
        if (c.n_star_median) {
            x.push_back(c.G);
            y.push_back(*c.n_star_median);
        }
    }
    if (x.size() < 3) {
        return {false, "fewer than three G values reach the threshold"};
    }
    const double n = static_cast<double>(x.size());
    const double mx = test::mean_of(x), my = test::mean_of(y);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    const double r2 = syy > 0 ? sxy * sxy / (sxx * syy) : 0.0;
    return {slope > 0 && r2 >= 0.8 && n == static_cast<double>(r.curves.size()),
            "slope " + fmt(slope) + ", intercept " + fmt(my - slope * mx) + ", R^2 " + fmt(r2)};
}

// ---------------------------------------------------------------- 3

// A state at trace distance exactly t from psi.
PureState at_distance(const CVector &psi, double t, Rng &rng) {
    CVector perp = sample_haar_vector(static_cast<std::size_t>(psi.size()), rng);
    perp -= psi * psi.dot(perp);
    perp.normalize();
    return PureState(3, {0, 1, 2}, std::sqrt(1.0 - t * t) * psi + t * perp);
}

Outcome criterion_3() {
    const double eta = 0.05, eps = 0.1, delta = 0.05;
    const int trials = 200;
    Rng rng(3003);
    int good = 0;
    std::size_t snapshots = 0;
    for (int t = 0; t < trials; ++t) {
        const CVector psi = sample_haar_vector(8, rng);
        const PureState truth(3, {0, 1, 2}, psi);
        std::vector<PureState> cands;
        for (double d : {0.3, eta, 0.45, 0.26, 0.6}) {
            cands.push_back(at_distance(psi, d, rng));
        }
        cands.emplace_back(3, std::vector<int>{0, 1, 2}, sample_haar_vector(8, rng));
        std::shuffle(cands.begin(), cands.end(), rng);
        StateOracle oracle(truth);
        LearnConfig cfg;
        cfg.epsilon = eps;
        cfg.delta = delta;
        cfg.rule = SelectionRule::HelstromTournament;
        cfg.junta_rounds = 0;
        cfg.dense_limit = 0;
        const LearnResult res = learn_state(oracle, CandidateNet::from_states(cands), cfg, rng);
        snapshots = res.snapshots;
        good += trace_distance_pure(cands[res.index], truth) <= 3 * eta + eps + 1e-12 ? 1 : 0;
    }
    const double frac = good / static_cast<double>(trials);
    return {frac >= 0.9, fmt(100 * frac) + "% of " + std::to_string(trials) + " trials within 3*eta + eps (" +
                             std::to_string(snapshots) + " snapshots per trial)"};
}

// ---------------------------------------------------------------- 4

Outcome criterion_4() {
    Rng rng(4004);
    std::string worst;
    double worst_z = 0.0;
    bool ok = true;
    const std::size_t count = 100000;
    for (ShadowScheme scheme : {ShadowScheme::Haar, ShadowScheme::Clifford}) {
        for (int k = 1; k <= 3; ++k) {
            std::vector<int> active(static_cast<std::size_t>(k));
            std::iota(active.begin(), active.end(), 0);
            const std::size_t dim = std::size_t{1} << k;
            const PureState rho(k, active, sample_haar_vector(dim, rng));
            const CVector u = sample_haar_vector(dim, rng);
            const auto obs = LowRankObservable::projector(u);
            const double exact = std::norm(u.dot(rho.amplitudes()));
            const auto snaps = collect_snapshots(rho, scheme, count, rng());
            std::vector<double> est;
            est.reserve(count);
            for (const auto &s : snaps) {
                est.push_back(estimate_observable(s, obs));
            }
            const double z = std::abs(test::mean_of(est) - exact) / test::standard_error(est);
            if (z > worst_z) {
                worst_z = z;
                worst = std::string(scheme_name(scheme)) + " k=" + std::to_string(k);
            }
            ok = ok && z <= 5.0;
        }
    }
    // Helstrom observables: single-shot variance against 4 tr(O^2).
    double worst_ratio = 0.0;
    for (int rep = 0; rep < 6; ++rep) {
        const int k = 1 + rep % 3;
        std::vector<int> active(static_cast<std::size_t>(k));
        std::iota(active.begin(), active.end(), 0);
        const std::size_t dim = std::size_t{1} << k;
        const PureState a(k, active, sample_haar_vector(dim, rng));
        const PureState b(k, active, sample_haar_vector(dim, rng));
        const PureState rho(k, active, sample_haar_vector(dim, rng));
        const LowRankObservable obs = helstrom_observable(a, b).observable();
        double tr_sq = 0.0;
        for (const auto &[l, v] : obs.eigenpairs) {
            tr_sq += l * l;
        }
        const ShadowScheme scheme = rep < 3 ? ShadowScheme::Haar : ShadowScheme::Clifford;
        const auto snaps = collect_snapshots(rho, scheme, count, rng());
        std::vector<double> est;
        for (const auto &s : snaps) {
            est.push_back(estimate_observable(s, obs));
        }
        const double m = test::mean_of(est);
        double var = 0.0;
        for (double e : est) {
            var += (e - m) * (e - m);
        }
        var /= static_cast<double>(est.size() - 1);
        worst_ratio = std::max(worst_ratio, var / (4.0 * tr_sq));
    }
    ok = ok && worst_ratio <= 1.0;
    return {ok, "largest bias " + fmt(worst_z, 3) + " SE (" + worst + "), largest variance / (4 tr O^2) " +
                    fmt(worst_ratio, 3)};
}

// ---------------------------------------------------------------- 5

Outcome criterion_5() {
    Rng rng(5005);
    double choi_err = 0.0;
    for (int d : {2, 4, 8}) {
        for (int rep = 0; rep < 100; ++rep) {
            const DenseUnitary u = sample_haar_unitary(static_cast<std::size_t>(d), rng);
            const DenseUnitary v = sample_haar_unitary(static_cast<std::size_t>(d), rng);
            const double dtr = trace_distance_pure(choi_state(u).state, choi_state(v).state);
            choi_err = std::max(choi_err, std::abs(davg(u, v) - std::sqrt(d / (d + 1.0)) * dtr));
        }
    }
    const char *names[] = {"d2'/sqrt2 <= dd/2", "dd/2 <= d2'", "d2' <= ||U-V||", "d2'/sqrt(d) <= dF'",
                           "dF' <= d2'",        "dF'/2 <= davg", "davg <= dF'"};
    std::string detail = "Choi identity max error " + fmt(choi_err, 3) + "; violations per d (2/4/8):";
    bool ok = choi_err <= 1e-10;
    for (int which = 0; which < 7; ++which) {
        std::string counts;
        for (int d : {2, 4, 8}) {
            Rng local(derive_seed(5006, static_cast<std::uint64_t>(d)));
            int bad = 0;
            for (int rep = 0; rep < 1000; ++rep) {
                const DenseUnitary u = sample_haar_unitary(static_cast<std::size_t>(d), local);
                const DenseUnitary v = sample_haar_unitary(static_cast<std::size_t>(d), local);
                const double s = d2_prime(u, v), f = df_prime(u, v), a = davg(u, v);
                const double dd = diamond_distance(u, v);
                const double op = (u.matrix() - v.matrix()).operatorNorm();
                const double lhs[] = {s / std::sqrt(2.0), dd / 2, s, s / std::sqrt(double(d)), f, f / 2, a};
                const double rhs[] = {dd / 2, s, op, f, s, a, f};
                bad += lhs[which] > rhs[which] + 1e-9 ? 1 : 0;
            }
            counts += (counts.empty() ? "" : "/") + std::to_string(bad);
            ok = ok && bad == 0;
        }
        detail += std::string(" [") + names[which] + ": " + counts + "]";
    }
    return {ok, detail};
}

// ---------------------------------------------------------------- 6

Outcome criterion_6() {
    Rng rng(6006);
    double worst = 0.0;
    for (int d : {2, 4}) {
        for (int rep = 0; rep < 50; ++rep) {
            const DenseUnitary u = sample_haar_unitary(static_cast<std::size_t>(d), rng);
            // Half the pairs are close, so the phase hull misses the origin.
            const DenseUnitary v =
                rep % 2 == 0 ? sample_haar_unitary(static_cast<std::size_t>(d), rng)
                             : u * test::unitary_with_phases(
                                       [&] {
                                           std::vector<double> ph(static_cast<std::size_t>(d));
                                           std::uniform_real_distribution<double> g(-0.6, 0.6);
                                           for (double &p : ph) {
                                               p = g(rng);
                                           }
                                           return ph;
                                       }(),
                                       rng);
            worst = std::max(worst, std::abs(diamond_distance(u, v) - test::diamond_oracle(u, v, rng, 100000)));
        }
    }
    CMatrix z = CMatrix::Identity(2, 2);
    z(1, 1) = -1.0;
    const double iz = diamond_distance(DenseUnitary::identity(2), DenseUnitary(z));
    return {worst <= 1e-3 && iz == 2.0, "max |hull - random-state max| " + fmt(worst, 3) + ", d(I,Z) = " + fmt(iz)};
}

// ---------------------------------------------------------------- 7

Outcome criterion_7() {
    Rng rng(7007);
    const int n = 10000;
    int unsound = 0;
    const int runs = 10000;
    for (int r = 0; r < runs; ++r) {
        Circuit c(n);
        const int G = 1 + static_cast<int>(rng() % 5);
        const int base = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 8));
        for (int g = 0; g < G; ++g) {
            const int q = base + static_cast<int>(rng() % 6);
            c.add(test::haar_gate(rng), q, q + 1);
        }
        const std::vector<int> truth = c.active_support();
        SupportEstimate e;
        if (r % 3 == 0) {
            const PureState s = run_circuit(c, PureState::zero(n));
            e = identify_support_state([&] { return s; }, n, 5, rng);
        } else if (r % 3 == 1) {
            UnitaryOracle o(c);
            e = identify_support_unitary(o, 5, rng);
        } else {
            UnitaryOracle o(c);
            e = identify_support_choi(o, 2, rng);
        }
        unsound += std::includes(truth.begin(), truth.end(), e.support.begin(), e.support.end()) ? 0 : 1;
    }
    CVector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    const PureState psi(n, {0}, plus);
    bool power = true;
    std::string rates;
    for (int N : {1, 2, 4, 8}) {
        const int reps = 10000;
        int hits = 0;
        for (int t = 0; t < reps; ++t) {
            hits += identify_support_state([&] { return psi; }, n, static_cast<std::size_t>(N), rng).support.empty()
                        ? 0
                        : 1;
        }
        const double p = 1.0 - std::pow(2.0, -N);
        const double phat = hits / static_cast<double>(reps);
        const double se = std::sqrt(p * (1 - p) / reps);
        power = power && std::abs(phat - p) <= 3.29 * se;
        rates += " N=" + std::to_string(N) + ":" + fmt(phat) + "/" + fmt(p);
    }
    return {unsound == 0 && power,
            std::to_string(unsound) + " unsound of " + std::to_string(runs) + " runs; detection (observed/exact)" +
                rates};
}

// ---------------------------------------------------------------- 8

DenseUnitary exp_i(const CMatrix &h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    CVector ph(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        ph[i] = std::polar(1.0, es.eigenvalues()[i]);
    }
    return DenseUnitary(CMatrix(es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint()));
}

Outcome criterion_8() {
    Rng rng(8008);
    const double eps = 0.2;
    const double c = 1e-5;
    bool ok = true;
    double worst_final = 0.0;
    int reps = 20;
    std::string sample;
    for (int rep = 0; rep < reps; ++rep) {
        const DenseUnitary u = sample_haar_unitary(2, rng);
        std::vector<DenseUnitary> net{u};
        std::normal_distribution<double> g;
        for (int m = 0; m < 50; ++m) {
            CMatrix h(2, 2);
            for (Eigen::Index i = 0; i < 4; ++i) {
                h.data()[i] = cplx(g(rng), g(rng));
            }
            h = (h + h.adjoint()).eval();
            h *= std::pow(10.0, -1.0 - 5.0 * m / 49.0) / h.norm();
            net.push_back(u * exp_i(h));
        }
        for (int m = 0; m < 20; ++m) {
            net.push_back(sample_haar_unitary(2, rng));
        }
        UnitaryOracle oracle(u, {0}, 1);
        LearnConfig cfg;
        cfg.epsilon = eps;
        BootstrapOptions opt;
        opt.exact_selection = true;
        opt.adversarial_accuracy = 1.0 / (25000.0 * std::sqrt(2.0));
        const BootstrapResult r = bootstrap_learn(oracle, CandidateNet::from_unitaries(net, {0}, 1), cfg, opt, rng);
        for (int k = 0; k <= r.t; ++k) {
            const double dk = r.errors[static_cast<std::size_t>(k)];
            const double next = r.errors[static_cast<std::size_t>(k) + 1];
            ok = ok && next < dk && next <= dk / 2 + 80 * c / (std::pow(2.0, k) * std::sqrt(2.0));
        }
        worst_final = std::max(worst_final, r.errors.back());
        if (rep == 0) {
            for (double e : r.errors) {
                sample += " " + fmt(e, 3);
            }
        }
    }
    ok = ok && worst_final <= eps;
    return {ok, std::to_string(reps) + " runs, worst final d_F' " + fmt(worst_final, 3) + "; first run d_F' by round:" +
                    sample + " (noisy shadow bootstrap at 1/(25000 sqrt d) not run: infeasible budget)"};
}

// ---------------------------------------------------------------- 9

Outcome criterion_9() {
    Rng rng(9009);
    double worst = 0.0;
    int missed = 0, checked = 0;
    for (int n = 1; n <= 3; ++n) {
        const int d = 1 << n;
        for (int r : {1, 2, 4, d}) {
            const DenseUnitary u = sample_haar_unitary(static_cast<std::size_t>(d), rng);
            const ClassicalDataset e = make_entangled_dataset(u, r);
            const ClassicalDataset m = make_mixed_dataset(u, r);
            if (e.size() != required_samples(n, r) || m.size() != required_samples(n, r)) {
                return {false, "dataset size differs from ceil(2^n / r)"};
            }
            worst = std::max({worst, davg(learn_from_entangled_data(e), u), davg(learn_from_mixed_data(m), u)});
            for (std::size_t drop = 0; drop < e.size(); ++drop) {
                ClassicalDataset e2 = e, m2 = m;
                e2.entangled.erase(e2.entangled.begin() + static_cast<std::ptrdiff_t>(drop));
                m2.mixed.erase(m2.mixed.begin() + static_cast<std::ptrdiff_t>(drop));
                for (int which = 0; which < 2; ++which) {
                    ++checked;
                    try {
                        which == 0 ? learn_from_entangled_data(e2) : learn_from_mixed_data(m2);
                        ++missed;
                    } catch (const IncompleteDataset &) {
                    }
                }
            }
        }
    }
    return {worst <= 1e-9 && missed == 0, "max d_avg " + fmt(worst, 3) + "; " + std::to_string(checked - missed) +
                                               "/" + std::to_string(checked) + " withheld blocks rejected"};
}

// ---------------------------------------------------------------- 10

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Outcome criterion_10() {
    const auto dir = std::filesystem::temp_directory_path() / ("bgc_accept_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    SweepConfig cfg;
    cfg.sweep_case = SweepCase::RandomPlacement;
    cfg.G_range = {1, 3, 5};
    cfg.N_range = parse_int_range("1..30");
    cfg.trials = 20;
    std::vector<std::string> records, summaries;
    int run = 0;
    for (int threads : {1, 1, 4}) {
        cfg.threads = threads;
        const auto path = dir / ("run" + std::to_string(run++) + ".csv");
        export_result(run_sweep(cfg), path.string(), ExportFormat::Csv);
        records.push_back(slurp(path));
        summaries.push_back(slurp(summary_path(path.string())));
    }
    std::filesystem::remove_all(dir);
    const bool same = records[0] == records[1] && records[0] == records[2] && summaries[0] == summaries[1] &&
                      summaries[0] == summaries[2];
    return {same && !records[0].empty(), "3 exports (threads 1, 1, 4), " + std::to_string(records[0].size()) +
                                             " bytes each, " + (same ? "identical" : "different")};
}

} // namespace

int main(int argc, char **argv) {
    const std::vector<std::function<Outcome()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                         criterion_5, criterion_6, criterion_7, criterion_8,
                                                         criterion_9, criterion_10};
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        only.insert(std::atoi(argv[i]));
    }
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(id)) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ") ["
                  << fmt(secs, 3) << " s]" << std::endl;
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}

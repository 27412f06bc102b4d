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

#include <gtest/gtest.h>

#include <cmath>

#include "bgc/error.hpp"
#include "bgc/junta.hpp"
#include "bgc/metrics.hpp"
#include "bgc/random.hpp"
#include "test_util.hpp"

namespace bgc {
namespace {

PureState plus_on_zero(int n) {
    CVector v(2);
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return PureState(n, {0}, v);
}

bool subset_of(const std::vector<int> &a, const std::vector<int> &b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// The six single-qubit stabilizer states, written out by hand.
std::vector<CVector> six_stabilizer_states() {
    const double h = 1.0 / std::sqrt(2.0);
    const cplx i(0.0, 1.0);
    std::vector<CVector> out(6, CVector(2));
    out[0] << 1, 0;
    out[1] << 0, 1;
    out[2] << h, h;
    out[3] << h, -h;
    out[4] << h, h * i;
    out[5] << h, -h * i;
    return out;
}

TEST(JuntaRounds, Formula) {
    EXPECT_EQ(junta_rounds(0.1, 0.01, 1), static_cast<std::size_t>(std::ceil(28.0 * std::log(400.0) / 0.3)));
    EXPECT_EQ(default_junta_rounds(2.4, 0.5, 0), junta_rounds(0.01, 0.5, 0));
    EXPECT_THROW(junta_rounds(0.0, 0.1, 1), InvalidArgument);
    EXPECT_THROW(junta_rounds(0.1, 1.0, 1), InvalidArgument);
}

TEST(SupportState, DeterministicExamples) {
    Rng rng(71);
    const int n = 50;
    auto zero = [&] { return PureState::zero(n); };
    EXPECT_TRUE(identify_support_state(zero, n, 30, rng).support.empty());
    CVector one(2);
    one << 0, 1;
    auto flipped = [&] { return PureState(n, {0}, one); };
    const SupportEstimate e = identify_support_state(flipped, n, 1, rng);
    EXPECT_EQ(e.support, std::vector<int>{0});
    EXPECT_EQ(e.rounds_used, 1U);
}

TEST(SupportState, PlusDetectionRate) {
    Rng rng(72);
    const int n = 10000;
    auto plus = [&] { return plus_on_zero(n); };
    // One round misses with probability 1/2.
    const int trials = 4000;
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        hits += identify_support_state(plus, n, 1, rng).support.empty() ? 0 : 1;
    }
    const double se = std::sqrt(0.25 / trials);
    EXPECT_NEAR(hits / static_cast<double>(trials), 0.5, 4 * se);
    int full = 0;
    for (int t = 0; t < 2000; ++t) {
        full += identify_support_state(plus, n, 20, rng).support == std::vector<int>{0} ? 1 : 0;
    }
    EXPECT_GE(full, 1998);
}

TEST(SupportState, SoundAndMonotone) {
    Rng rng(73);
    for (int rep = 0; rep < 300; ++rep) {
        const Circuit c = test::random_circuit(12, 2, rng);
        const PureState s = run_circuit(c, PureState::zero(12));
        auto copy = [&] { return s; };
        const SupportEstimate e = identify_support_state(copy, 12, 8, rng);
        EXPECT_TRUE(subset_of(e.support, c.active_support()));
    }
    // Rounds add to the set, never remove.
    const PureState s = run_circuit(test::random_circuit(6, 3, rng), PureState::zero(6));
    std::vector<int> acc;
    for (int r = 0; r < 20; ++r) {
        Rng step(1000 + r);
        auto copy = [&] { return s; };
        const SupportEstimate e = identify_support_state(copy, 6, 1, step);
        std::vector<int> merged;
        std::set_union(acc.begin(), acc.end(), e.support.begin(), e.support.end(), std::back_inserter(merged));
        EXPECT_TRUE(subset_of(acc, merged));
        acc = merged;
    }
}

TEST(SupportState, OverlapGuarantee) {
    Rng rng(74);
    const double eps1 = 0.1;
    const double delta = 0.01;
    const std::size_t rounds = junta_rounds(eps1, delta, 1);
    const int runs = 1000;
    int failures = 0;
    for (int t = 0; t < runs; ++t) {
        const PureState s(20, {4, 5}, sample_haar_vector(4, rng));
        auto copy = [&] { return s; };
        const SupportEstimate e = identify_support_state(copy, 20, rounds, rng);
        const std::vector<int> outside = active_outside(s, e.support);
        const double p = outside.empty() ? 1.0 : postselect_zero(s, outside).success_prob;
        failures += p < 1.0 - eps1 ? 1 : 0;
    }
    EXPECT_LE(failures, static_cast<int>(runs * delta + 3 * std::sqrt(runs * delta)));
}

TEST(SupportUnitary, IdentityAndX) {
    Rng rng(75);
    UnitaryOracle id(DenseUnitary::identity(2), {3}, 8);
    EXPECT_TRUE(identify_support_unitary(id, 30, rng).support.empty());

    // Exact per-round detection for X: average over stabilizer inputs of
    // the probability that X|s> leaves |s>.
    const CMatrix x = gates::pauli_x();
    double exact = 0.0;
    for (const CVector &s : six_stabilizer_states()) {
        exact += (1.0 - std::norm(s.dot(x * s))) / 6.0;
    }
    EXPECT_NEAR(exact, 2.0 / 3.0, 1e-12);
    UnitaryOracle xo(DenseUnitary(x), {0}, 8);
    const int trials = 3000;
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        hits += identify_support_unitary(xo, 1, rng).support.empty() ? 0 : 1;
    }
    EXPECT_NEAR(hits / static_cast<double>(trials), exact, 4 * std::sqrt(exact * (1 - exact) / trials));
    int full = 0;
    for (int t = 0; t < 1000; ++t) {
        full += identify_support_unitary(xo, 30, rng).support == std::vector<int>{0} ? 1 : 0;
    }
    EXPECT_GE(full, 999);
}

TEST(SupportUnitary, Cnot) {
    Rng rng(76);
    Circuit c(40);
    c.add(gates::cnot(), 0, 1);
    UnitaryOracle o(c);
    int both = 0;
    for (int t = 0; t < 500; ++t) {
        const SupportEstimate e = identify_support_unitary(o, 30, rng);
        EXPECT_TRUE(subset_of(e.support, {0, 1}));
        both += e.support == std::vector<int>{0, 1} ? 1 : 0;
    }
    EXPECT_GE(both, 495);
    EXPECT_EQ(o.queries_used(), 500U * 30U);
}

TEST(SupportChoi, Examples) {
    Rng rng(77);
    UnitaryOracle id(DenseUnitary::identity(4), {0, 1}, 6);
    EXPECT_TRUE(identify_support_choi(id, 20, rng).support.empty());
    UnitaryOracle z(DenseUnitary(CMatrix(gates::pauli_z())), {2}, 6);
    EXPECT_EQ(identify_support_choi(z, 1, rng).support, std::vector<int>{2});

    const DenseUnitary u = sample_haar_unitary(2, rng);
    const double exact = 1.0 - std::norm(u.matrix().trace()) / 4.0;
    UnitaryOracle h(u, {1}, 4);
    const int trials = 3000;
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        hits += identify_support_choi(h, 1, rng).support.empty() ? 0 : 1;
    }
    EXPECT_NEAR(hits / static_cast<double>(trials), exact, 4 * std::sqrt(exact * (1 - exact) / trials) + 1e-3);
}

TEST(SupportChoi, Sound) {
    Rng rng(78);
    for (int rep = 0; rep < 100; ++rep) {
        const Circuit c = test::random_circuit(8, 2, rng);
        UnitaryOracle o(c);
        EXPECT_TRUE(subset_of(identify_support_choi(o, 5, rng).support, c.active_support()));
    }
}

TEST(Postselect, Examples) {
    const PureState z = PureState::zero(5);
    const PostselectResult a = postselect_zero(z, {0, 1, 2});
    EXPECT_EQ(a.success_prob, 1.0);
    EXPECT_NEAR(std::abs(inner_product(a.state, z)), 1.0, 1e-15);

    CVector v(4);
    const double h = 1.0 / std::sqrt(2.0);
    v << h, 0, h, 0;
    const PostselectResult b = postselect_zero(PureState(2, {0, 1}, v), {0});
    EXPECT_NEAR(b.success_prob, 0.5, 1e-15);
    EXPECT_NEAR(std::abs(inner_product(b.state, PureState::zero(2))), 1.0, 1e-15);

    CVector one(2);
    one << 0, 1;
    EXPECT_THROW(postselect_zero(PureState(3, {1}, one), {1}), PostselectionImpossible);
}

TEST(Postselect, GentleMeasurement) {
    Rng rng(79);
    for (int rep = 0; rep < 200; ++rep) {
        const PureState s(4, {0, 1, 2}, sample_haar_vector(8, rng));
        const PostselectResult r = postselect_zero(s, {rep % 3});
        const double dtr = std::sqrt(std::max(0.0, 1.0 - std::norm(inner_product(s, r.state))));
        EXPECT_LE(dtr, std::sqrt(1.0 - r.success_prob) + 1e-12);
        EXPECT_NEAR(std::norm(inner_product(s, r.state)), r.success_prob, 1e-12);
    }
}

} // namespace
} // namespace bgc

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

#include <map>
#include <set>
#include <sstream>

#include "bgc/circuit_io.hpp"
#include "bgc/error.hpp"
#include "bgc/qcore.hpp"
#include "bgc/random.hpp"
#include "test_util.hpp"

namespace bgc {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

TEST(RunCircuit, EmptyCircuitKeepsZeroState) {
    const PureState out = run_circuit(Circuit(3), PureState::zero(3));
    EXPECT_TRUE(out.active().empty());
    EXPECT_EQ(out.n_total(), 3);
    EXPECT_NEAR(std::abs(out.amplitudes()(0)), 1.0, 1e-15);
}

TEST(RunCircuit, HadamardOnFirstQubit) {
    Circuit c(2);
    c.add(gates::kron(gates::hadamard(), gates::identity2()), 0, 1);
    const PureState out = run_circuit(c, PureState::zero(2));
    ASSERT_EQ(out.active(), (std::vector<int>{0, 1}));
    const CVector &a = out.amplitudes();
    EXPECT_NEAR(std::abs(a(0) - kInvSqrt2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a(1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a(2) - kInvSqrt2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a(3)), 0.0, 1e-15);
}

TEST(RunCircuit, MatchesDenseReferenceOnFourQubits) {
    Rng rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const Circuit c = test::random_circuit(4, 6, rng);
        const CVector want = test::dense_run(c);
        const CVector got = test::full_vector(run_circuit(c, PureState::zero(4)));
        EXPECT_LT((want - got).cwiseAbs().maxCoeff(), 1e-12);
        const CVector via_unitary = circuit_unitary(c, {0, 1, 2, 3}).matrix().col(0);
        EXPECT_LT((via_unitary - got).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(RunCircuit, NormAndComposition) {
    Rng rng(12);
    for (int rep = 0; rep < 20; ++rep) {
        const Circuit a = test::random_circuit(5, 4, rng);
        const Circuit b = test::random_circuit(5, 3, rng);
        const PureState s1 = run_circuit(a.then(b), PureState::zero(5));
        const PureState s2 = run_circuit(b, run_circuit(a, PureState::zero(5)));
        EXPECT_NEAR(s1.amplitudes().norm(), 1.0, 1e-9);
        EXPECT_LT((test::full_vector(s1) - test::full_vector(s2)).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(RunCircuit, InverseOnTrivialQubitsLeavesStateUnchanged) {
    Rng rng(13);
    Circuit prep(50);
    prep.add(test::haar_gate(rng), 3, 7);
    const PureState s = run_circuit(prep, PureState::zero(50));
    Circuit touch(50);
    touch.add(test::haar_gate(rng), 20, 41);
    const PureState back = compact(run_circuit(touch.then(touch.inverse()), s), 1e-20);
    EXPECT_EQ(back.active(), s.active());
    EXPECT_LT((back.amplitudes() - s.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(RunCircuit, LargeRegisterWithSmallSupport) {
    Rng rng(14);
    Circuit c(10000);
    c.add(test::haar_gate(rng), 9998, 9999);
    c.add(test::haar_gate(rng), 0, 9998);
    const PureState s = run_circuit(c, PureState::zero(10000));
    EXPECT_EQ(s.active(), (std::vector<int>{0, 9998, 9999}));
}

TEST(RunCircuit, Errors) {
    Rng rng(15);
    Circuit c(30);
    for (int q = 0; q + 1 < 30; q += 2) {
        c.add(test::haar_gate(rng), q, q + 1);
    }
    EXPECT_THROW(run_circuit(c, PureState::zero(30), 20), SupportCapExceeded);
    EXPECT_THROW(run_circuit(Circuit(3), PureState::zero(4)), DimensionMismatch);
    EXPECT_THROW(Circuit(2).add(gates::cnot(), 0, 0), InvalidArgument);
    EXPECT_THROW(Circuit(2).add(gates::cnot(), 0, 2), InvalidArgument);
    Gate4 bad = Gate4::Identity();
    bad(0, 0) = 2.0;
    EXPECT_THROW(GatePlacement(bad, 0, 1), InvalidArgument);
}

TEST(CircuitUnitary, EmptyIsIdentity) {
    const DenseUnitary u = circuit_unitary(Circuit(2), {0, 1});
    EXPECT_LT(test::max_abs_diff(u.matrix(), CMatrix::Identity(4, 4)), 1e-15);
}

TEST(CircuitUnitary, Cnot) {
    Circuit c(2);
    c.add(gates::cnot(), 0, 1);
    CMatrix want = CMatrix::Zero(4, 4);
    want(0, 0) = want(1, 1) = want(2, 3) = want(3, 2) = 1.0;
    EXPECT_LT(test::max_abs_diff(circuit_unitary(c, {0, 1}).matrix(), want), 1e-15);
    // Reversed roles: control on qubit 1.
    Circuit r(2);
    r.add(gates::cnot(), 1, 0);
    CMatrix rev = CMatrix::Zero(4, 4);
    rev(0, 0) = rev(2, 2) = rev(1, 3) = rev(3, 1) = 1.0;
    EXPECT_LT(test::max_abs_diff(circuit_unitary(r, {0, 1}).matrix(), rev), 1e-15);
}

TEST(CircuitUnitary, ProductOfEmbeddedGates) {
    Rng rng(16);
    const Gate4 g1 = test::haar_gate(rng);
    const Gate4 g2 = test::haar_gate(rng);
    Circuit c(3);
    c.add(g1, 2, 0);
    c.add(g2, 1, 2);
    const CMatrix want = test::embed(g2, 1, 2, 3) * test::embed(g1, 2, 0, 3);
    EXPECT_LT(test::max_abs_diff(circuit_unitary(c, {0, 1, 2}).matrix(), want), 1e-12);
}

TEST(CircuitUnitary, SubsetOrderAndErrors) {
    Rng rng(17);
    Circuit c(6);
    c.add(test::haar_gate(rng), 5, 2);
    const DenseUnitary u = circuit_unitary(c, {2, 5});
    // On subset {2, 5} the placement (5, 2) swaps roles relative to the matrix index.
    const CMatrix want = test::embed(c.gates()[0].matrix(), 1, 0, 2);
    EXPECT_LT(test::max_abs_diff(u.matrix(), want), 1e-12);
    EXPECT_THROW(circuit_unitary(c, {2, 3}), TargetOutsideSubset);
    std::vector<int> big(21);
    for (int i = 0; i < 21; ++i) {
        big[static_cast<std::size_t>(i)] = i;
    }
    Circuit wide(21);
    EXPECT_THROW(circuit_unitary(wide, big), SupportCapExceeded);
}

TEST(SampleComputational, ZeroStateAlwaysZero) {
    Rng rng(18);
    Circuit c(3);
    c.add(Gate4::Identity(), 0, 2);
    const PureState s = run_circuit(c, PureState::zero(3));
    for (int i = 0; i < 100; ++i) {
        for (auto b : sample_computational(s, rng)) {
            EXPECT_EQ(b, 0);
        }
    }
}

TEST(SampleComputational, PlusStateIsFair) {
    Rng rng(19);
    const PureState plus(1, {0}, CVector::Constant(2, kInvSqrt2));
    const int n = 100000;
    int ones = 0;
    for (int i = 0; i < n; ++i) {
        ones += sample_computational(plus, rng)[0];
    }
    const double sigma = std::sqrt(0.25 / n);
    EXPECT_NEAR(static_cast<double>(ones) / n, 0.5, 5 * sigma);
}

TEST(SampleComputational, BellStateOnlyCorrelatedOutcomes) {
    Rng rng(20);
    CVector a = CVector::Zero(4);
    a(0) = a(3) = kInvSqrt2;
    const PureState bell(2, {0, 1}, a);
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < 2000; ++i) {
        const auto b = sample_computational(bell, rng);
        seen.insert({b[0], b[1]});
    }
    EXPECT_EQ(seen, (std::set<std::pair<int, int>>{{0, 0}, {1, 1}}));
}

TEST(PureStateType, RejectsInvalid) {
    EXPECT_THROW(PureState(2, {1, 0}, CVector::Constant(4, 0.5)), InvalidArgument);
    EXPECT_THROW(PureState(2, {0, 1}, CVector::Constant(4, 1.0)), InvalidArgument);
    EXPECT_THROW(PureState(2, {0, 1}, CVector::Constant(2, kInvSqrt2)), DimensionMismatch);
    EXPECT_THROW(PureState(2, {0, 2}, CVector::Constant(4, 0.5)), InvalidArgument);
}

TEST(HaarUnitary, DimensionOneIsPhase) {
    Rng rng(21);
    const DenseUnitary u = sample_haar_unitary(1, rng);
    EXPECT_NEAR(std::abs(u.matrix()(0, 0)), 1.0, 1e-14);
}

TEST(HaarUnitary, SecondMoment) {
    Rng rng(22);
    std::vector<double> x;
    for (int i = 0; i < 10000; ++i) {
        x.push_back(std::norm(sample_haar_unitary(2, rng).matrix()(0, 0)));
    }
    EXPECT_NEAR(test::mean_of(x), 0.5, 5 * test::standard_error(x));
}

TEST(HaarUnitary, UnitaryAndLeftInvariant) {
    Rng rng(23);
    const DenseUnitary w = sample_haar_unitary(4, rng);
    std::vector<double> plain, rotated;
    for (int i = 0; i < 20000; ++i) {
        const DenseUnitary u = sample_haar_unitary(4, rng);
        EXPECT_LT(unitarity_error(u.matrix()), 1e-10);
        plain.push_back(std::pow(std::norm(u.matrix()(0, 0)), 2));
        rotated.push_back(std::pow(std::norm((w.matrix() * u.matrix())(0, 0)), 2));
    }
    // E|U_00|^4 = 2 / (d (d + 1)) for Haar U, and so for W U.
    const double want = 2.0 / 20.0;
    EXPECT_NEAR(test::mean_of(plain), want, 5 * test::standard_error(plain));
    EXPECT_NEAR(test::mean_of(rotated), want, 5 * test::standard_error(rotated));
}

// Index 0..5 of +-X, +-Y, +-Z, or -1.
int signed_pauli(const Gate2 &m) {
    const Gate2 p[3] = {gates::pauli_x(), gates::pauli_y(), gates::pauli_z()};
    for (int i = 0; i < 3; ++i) {
        if ((m - p[i]).cwiseAbs().maxCoeff() < 1e-9) {
            return 2 * i;
        }
        if ((m + p[i]).cwiseAbs().maxCoeff() < 1e-9) {
            return 2 * i + 1;
        }
    }
    return -1;
}

TEST(RandomClifford, SingleQubitActionsUniform) {
    Rng rng(24);
    std::map<std::pair<int, int>, int> counts;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const Gate2 c = sample_random_clifford(1, rng).matrix();
        const int zx = signed_pauli(c * gates::pauli_x() * c.adjoint());
        const int zz = signed_pauli(c * gates::pauli_z() * c.adjoint());
        ASSERT_GE(zx, 0);
        ASSERT_GE(zz, 0);
        ++counts[{zx, zz}];
    }
    ASSERT_EQ(counts.size(), 24U);
    const double p = 1.0 / 24.0;
    const double sigma = std::sqrt(p * (1 - p) / n);
    for (const auto &[key, c] : counts) {
        EXPECT_NEAR(static_cast<double>(c) / n, p, 5 * sigma);
    }
}

TEST(RandomClifford, TwoQubitsMapPaulisToPaulis) {
    Rng rng(25);
    const Gate2 p1[4] = {gates::identity2(), gates::pauli_x(), gates::pauli_y(), gates::pauli_z()};
    for (int rep = 0; rep < 50; ++rep) {
        const CMatrix c = sample_random_clifford(2, rng).matrix();
        EXPECT_LT(unitarity_error(c), 1e-10);
        for (int a = 1; a < 4; ++a) {
            const CMatrix img = c * CMatrix(gates::kron(p1[a], p1[0])) * c.adjoint();
            bool found = false;
            for (int x = 0; x < 4 && !found; ++x) {
                for (int y = 0; y < 4 && !found; ++y) {
                    const CMatrix q = gates::kron(p1[x], p1[y]);
                    found = (img - q).cwiseAbs().maxCoeff() < 1e-9 || (img + q).cwiseAbs().maxCoeff() < 1e-9;
                }
            }
            EXPECT_TRUE(found);
        }
    }
}

TEST(StabilizerProduct, Labels) {
    const PureState zero = stabilizer_product_state({{0}}, {0}, 1);
    EXPECT_NEAR(std::abs(zero.amplitudes()(0)), 1.0, 1e-15);
    const PureState plus = stabilizer_product_state({{2}}, {0}, 1);
    EXPECT_NEAR(std::abs(plus.amplitudes()(0) - kInvSqrt2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(plus.amplitudes()(1) - kInvSqrt2), 0.0, 1e-15);
    const PureState yminus = stabilizer_product_state({{5}}, {0}, 1);
    EXPECT_NEAR(std::abs(yminus.amplitudes()(1) - cplx(0, -kInvSqrt2)), 0.0, 1e-15);
}

TEST(StabilizerProduct, UniformLabels) {
    Rng rng(26);
    std::map<int, int> counts;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const auto [label, state] = sample_stabilizer_product(2, rng);
        ++counts[6 * label.labels[0] + label.labels[1]];
    }
    ASSERT_EQ(counts.size(), 36U);
    const double p = 1.0 / 36.0;
    const double sigma = std::sqrt(p * (1 - p) / n);
    for (const auto &[key, c] : counts) {
        EXPECT_NEAR(static_cast<double>(c) / n, p, 5 * sigma);
    }
}

TEST(CircuitIo, RoundTripIsBitExact) {
    Rng rng(27);
    const Circuit c = test::random_circuit(7, 5, rng);
    const Circuit back = circuit_from_string(circuit_to_string(c));
    ASSERT_EQ(back.n_qubits(), 7);
    ASSERT_EQ(back.gate_count(), 5U);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(back.gates()[i].q1(), c.gates()[i].q1());
        EXPECT_EQ(back.gates()[i].q2(), c.gates()[i].q2());
        for (int r = 0; r < 4; ++r) {
            for (int s = 0; s < 4; ++s) {
                EXPECT_EQ(back.gates()[i].matrix()(r, s), c.gates()[i].matrix()(r, s));
            }
        }
    }
    EXPECT_EQ(circuit_to_string(back), circuit_to_string(c));
    EXPECT_THROW(circuit_from_string("n 2 g 1\n0 1 1,0"), ParseError);
}

} // namespace
} // namespace bgc

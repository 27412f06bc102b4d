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

#include <sstream>

#include "bgc/classical_data.hpp"
#include "bgc/error.hpp"
#include "bgc/metrics.hpp"
#include "bgc/random.hpp"

namespace bgc {
namespace {

TEST(ClassicalData, RequiredSamples) {
    EXPECT_EQ(required_samples(1, 2), 1U);
    EXPECT_EQ(required_samples(2, 2), 2U);
    EXPECT_EQ(required_samples(3, 1), 8U);
    EXPECT_EQ(required_samples(3, 3), 3U);
    EXPECT_EQ(required_samples(2, 8), 1U);
}

TEST(ClassicalData, SingleMaximallyEntangledSample) {
    Rng rng(111);
    const DenseUnitary u = sample_haar_unitary(2, rng);
    const ClassicalDataset ds = make_entangled_dataset(u, 2);
    ASSERT_EQ(ds.size(), 1U);
    EXPECT_LT((learn_from_entangled_data(ds).matrix() - u.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ClassicalData, ExactForAllRanks) {
    Rng rng(112);
    for (int n = 1; n <= 3; ++n) {
        const int d = 1 << n;
        for (int r : {1, 2, 4, d}) {
            const DenseUnitary u = sample_haar_unitary(static_cast<std::size_t>(d), rng);
            const ClassicalDataset e = make_entangled_dataset(u, r);
            const ClassicalDataset m = make_mixed_dataset(u, r);
            EXPECT_EQ(e.size(), required_samples(n, r));
            EXPECT_EQ(m.size(), required_samples(n, r));
            EXPECT_LE(davg(learn_from_entangled_data(e), u), 1e-9) << "n=" << n << " r=" << r;
            EXPECT_LE(davg(learn_from_mixed_data(m), u), 1e-9) << "n=" << n << " r=" << r;
            EXPECT_LT((learn_from_mixed_data(m).matrix() - u.matrix()).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(ClassicalData, IdentityMixed) {
    const ClassicalDataset m = make_mixed_dataset(DenseUnitary::identity(4), 2);
    EXPECT_LT((learn_from_mixed_data(m).matrix() - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ClassicalData, WithheldBlocks) {
    Rng rng(113);
    const DenseUnitary u = sample_haar_unitary(4, rng);
    for (std::size_t drop = 0; drop < 2; ++drop) {
        ClassicalDataset e = make_entangled_dataset(u, 2);
        e.entangled.erase(e.entangled.begin() + static_cast<std::ptrdiff_t>(drop));
        EXPECT_THROW(learn_from_entangled_data(e), IncompleteDataset);
        ClassicalDataset m = make_mixed_dataset(u, 2);
        m.mixed.erase(m.mixed.begin() + static_cast<std::ptrdiff_t>(drop));
        EXPECT_THROW(learn_from_mixed_data(m), IncompleteDataset);
    }
    ClassicalDataset m = make_mixed_dataset(u, 2);
    m.mixed[1].components.pop_back();
    EXPECT_THROW(learn_from_mixed_data(m), IncompleteDataset);
    EXPECT_THROW(learn_from_mixed_data(make_entangled_dataset(u, 2)), InvalidArgument);
}

TEST(ClassicalData, FileRoundTrip) {
    Rng rng(114);
    const DenseUnitary u = sample_haar_unitary(8, rng);
    for (const ClassicalDataset &ds : {make_entangled_dataset(u, 2), make_mixed_dataset(u, 4)}) {
        std::stringstream ss;
        write_dataset(ss, ds);
        const ClassicalDataset back = read_dataset(ss);
        EXPECT_EQ(back.mode, ds.mode);
        EXPECT_EQ(back.n, ds.n);
        EXPECT_EQ(back.r, ds.r);
        ASSERT_EQ(back.size(), ds.size());
        for (std::size_t i = 0; i < ds.entangled.size(); ++i) {
            EXPECT_EQ(back.entangled[i].input, ds.entangled[i].input);
            EXPECT_EQ(back.entangled[i].output, ds.entangled[i].output);
        }
        for (std::size_t i = 0; i < ds.mixed.size(); ++i) {
            ASSERT_EQ(back.mixed[i].components.size(), ds.mixed[i].components.size());
            for (std::size_t c = 0; c < ds.mixed[i].components.size(); ++c) {
                EXPECT_EQ(back.mixed[i].components[c].probability, ds.mixed[i].components[c].probability);
                EXPECT_EQ(back.mixed[i].components[c].output, ds.mixed[i].components[c].output);
            }
        }
    }
    std::stringstream bad("mode quantum\n");
    EXPECT_THROW(read_dataset(bad), ParseError);
}

} // namespace
} // namespace bgc

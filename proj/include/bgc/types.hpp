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

#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace bgc {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Gate4 = Eigen::Matrix4cd;
using Gate2 = Eigen::Matrix2cd;

/// Random engine used throughout. Every routine that draws randomness takes
/// one by reference; nothing holds hidden global state.
using Rng = std::mt19937_64;

inline constexpr double kUnitarityTol = 1e-10;
inline constexpr double kNormTol = 1e-10;
inline constexpr int kDefaultSupportCap = 20;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives a child seed from a base seed and a list of integer keys.
/// Used for per-trial and per-snapshot seeding so results do not depend on
/// the order in which work is dispatched.
template <typename... Keys>
constexpr std::uint64_t derive_seed(std::uint64_t base, Keys... keys) {
    std::uint64_t h = mix64(base);
    ((h = mix64(h ^ mix64(static_cast<std::uint64_t>(keys) + 0x632be59bd9b4e019ULL))), ...);
    return h;
}

} // namespace bgc

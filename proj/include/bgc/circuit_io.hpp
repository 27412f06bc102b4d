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
 * Line-oriented text serialization of circuits and dense unitaries.
 *
 *   n <n_qubits> g <gate_count>
 *   <q1> <q2> re,im re,im ... (16 entries, row-major)
 *
 * Real numbers are written with 17 significant digits so that a round trip
 * reproduces every double exactly.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bgc/qcore.hpp"

namespace bgc {

/// Shortest-safe decimal text for a double (17 significant digits).
std::string format_real(double x);
std::string format_complex(cplx z);

double parse_real(std::string_view text);
/// Parses `re,im`.
cplx parse_complex(std::string_view text);

void write_circuit(std::ostream &out, const Circuit &circuit);
Circuit read_circuit(std::istream &in);

std::string circuit_to_string(const Circuit &circuit);
Circuit circuit_from_string(const std::string &text);

/// `dim` followed by dim*dim complex entries, row-major, on one line.
void write_matrix(std::ostream &out, const CMatrix &m);
CMatrix read_matrix(std::istream &in);

} // namespace bgc

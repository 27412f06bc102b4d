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

#include "bgc/circuit_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace bgc {

std::string format_real(double x) {
    char buf[40];
    const int len = std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf, static_cast<std::size_t>(len));
}

std::string format_complex(cplx z) { return format_real(z.real()) + "," + format_real(z.imag()); }

double parse_real(std::string_view text) {
    double x = 0.0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, x);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("bad number '" + std::string(text) + "'");
    }
    return x;
}

cplx parse_complex(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        throw ParseError("expected re,im but got '" + std::string(text) + "'");
    }
    return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

namespace {

std::string next_token(std::istream &in, const char *what) {
    std::string tok;
    if (!(in >> tok)) {
        throw ParseError(std::string("unexpected end of input reading ") + what);
    }
    return tok;
}

void expect_keyword(std::istream &in, const char *kw) {
    const std::string tok = next_token(in, kw);
    if (tok != kw) {
        throw ParseError("expected '" + std::string(kw) + "' but got '" + tok + "'");
    }
}

long parse_int(const std::string &tok) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("bad integer '" + tok + "'");
    }
    return v;
}

} // namespace

void write_circuit(std::ostream &out, const Circuit &circuit) {
    out << "n " << circuit.n_qubits() << " g " << circuit.gate_count() << '\n';
    for (const auto &g : circuit.gates()) {
        out << g.q1() << ' ' << g.q2();
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                out << ' ' << format_complex(g.matrix()(r, c));
            }
        }
        out << '\n';
    }
}

Circuit read_circuit(std::istream &in) {
    expect_keyword(in, "n");
    const long n = parse_int(next_token(in, "qubit count"));
    expect_keyword(in, "g");
    const long g = parse_int(next_token(in, "gate count"));
    if (n <= 0 || g < 0) {
        throw ParseError("invalid circuit header");
    }
    Circuit circuit(static_cast<int>(n));
    for (long i = 0; i < g; ++i) {
        const long q1 = parse_int(next_token(in, "target"));
        const long q2 = parse_int(next_token(in, "target"));
        Gate4 m;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                m(r, c) = parse_complex(next_token(in, "gate entry"));
            }
        }
        try {
            circuit.add(m, static_cast<int>(q1), static_cast<int>(q2));
        } catch (const Error &e) {
            throw ParseError(std::string("gate ") + std::to_string(i) + ": " + e.what());
        }
    }
    return circuit;
}

std::string circuit_to_string(const Circuit &circuit) {
    std::ostringstream out;
    write_circuit(out, circuit);
    return out.str();
}

Circuit circuit_from_string(const std::string &text) {
    std::istringstream in(text);
    return read_circuit(in);
}

void write_matrix(std::ostream &out, const CMatrix &m) {
    out << m.rows();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out << ' ' << format_complex(m(r, c));
        }
    }
}

CMatrix read_matrix(std::istream &in) {
    const long dim = parse_int(next_token(in, "matrix dimension"));
    if (dim <= 0 || dim > (1L << 12)) {
        throw ParseError("invalid matrix dimension");
    }
    CMatrix m(dim, dim);
    for (long r = 0; r < dim; ++r) {
        for (long c = 0; c < dim; ++c) {
            m(r, c) = parse_complex(next_token(in, "matrix entry"));
        }
    }
    return m;
}

} // namespace bgc

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

#include "bgc/classical_data.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "bgc/circuit_io.hpp"

namespace bgc {

std::size_t required_samples(int n, int r) {
    if (n < 1 || n > 10 || r < 1) {
        throw InvalidArgument("need 1 <= n <= 10 and r >= 1");
    }
    const std::size_t d = std::size_t{1} << n;
    const auto rr = static_cast<std::size_t>(r);
    return (d + rr - 1) / rr;
}

namespace {

struct Block {
    std::size_t begin;
    std::size_t end;
};

std::vector<Block> blocks(std::size_t d, int r) {
    std::vector<Block> out;
    const auto rr = static_cast<std::size_t>(r);
    for (std::size_t b = 0; b < d; b += rr) {
        out.push_back({b, std::min(b + rr, d)});
    }
    return out;
}

CVector basis_pair(std::size_t d, std::size_t k, std::size_t i) {
    CVector v = CVector::Zero(static_cast<Eigen::Index>(d * d));
    v[static_cast<Eigen::Index>(k * d + i)] = 1.0;
    return v;
}

std::size_t dataset_dim(const ClassicalDataset &ds) {
    if (ds.n < 1 || ds.n > 10) {
        throw InvalidArgument("dataset qubit count out of range");
    }
    return std::size_t{1} << ds.n;
}

void check_vector(const CVector &v, std::size_t d) {
    if (static_cast<std::size_t>(v.size()) != d * d) {
        throw DimensionMismatch("dataset vector must have length d^2");
    }
}

} // namespace

ClassicalDataset make_entangled_dataset(const DenseUnitary &u, int r) {
    ClassicalDataset ds;
    ds.mode = DatasetMode::Entangled;
    ds.n = u.num_qubits();
    ds.r = r;
    required_samples(ds.n, r);
    const std::size_t d = u.dim();
    for (const Block &b : blocks(d, r)) {
        const double z = std::sqrt(static_cast<double>(b.end - b.begin));
        const auto dd = static_cast<Eigen::Index>(d * d);
        EntangledSample s{CVector::Zero(dd), CVector::Zero(dd)};
        for (std::size_t i = b.begin; i < b.end; ++i) {
            s.input[static_cast<Eigen::Index>(i * d + i)] = 1.0 / z;
            for (std::size_t k = 0; k < d; ++k) {
                s.output[static_cast<Eigen::Index>(k * d + i)] =
                    u.matrix()(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) / z;
            }
        }
        ds.entangled.push_back(std::move(s));
    }
    return ds;
}

ClassicalDataset make_mixed_dataset(const DenseUnitary &u, int r) {
    ClassicalDataset ds;
    ds.mode = DatasetMode::Mixed;
    ds.n = u.num_qubits();
    ds.r = r;
    required_samples(ds.n, r);
    const std::size_t d = u.dim();
    for (const Block &b : blocks(d, r)) {
        MixedSample s;
        const double p = 1.0 / static_cast<double>(b.end - b.begin);
        for (std::size_t i = b.begin; i < b.end; ++i) {
            MixedComponent c{p, basis_pair(d, i, i), CVector::Zero(static_cast<Eigen::Index>(d * d))};
            for (std::size_t k = 0; k < d; ++k) {
                c.output[static_cast<Eigen::Index>(k * d + i)] =
                    u.matrix()(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i));
            }
            s.components.push_back(std::move(c));
        }
        ds.mixed.push_back(std::move(s));
    }
    return ds;
}

DenseUnitary learn_from_entangled_data(const ClassicalDataset &ds) {
    if (ds.mode != DatasetMode::Entangled) {
        throw InvalidArgument("dataset is not entangled-mode");
    }
    const std::size_t d = dataset_dim(ds);
    CMatrix u = CMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    std::vector<bool> seen(d, false);
    for (const auto &s : ds.entangled) {
        check_vector(s.input, d);
        check_vector(s.output, d);
        for (std::size_t i = 0; i < d; ++i) {
            const cplx a = s.input[static_cast<Eigen::Index>(i * d + i)];
            if (std::abs(a) < 1e-12) {
                continue;
            }
            for (std::size_t k = 0; k < d; ++k) {
                u(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) =
                    s.output[static_cast<Eigen::Index>(k * d + i)] / a;
            }
            seen[i] = true;
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (!seen[i]) {
            throw IncompleteDataset("no sample covers column " + std::to_string(i));
        }
    }
    return DenseUnitary(std::move(u), 1e-9);
}

DenseUnitary learn_from_mixed_data(const ClassicalDataset &ds) {
    if (ds.mode != DatasetMode::Mixed) {
        throw InvalidArgument("dataset is not mixed-mode");
    }
    const std::size_t d = dataset_dim(ds);
    CMatrix u = CMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    std::vector<bool> seen(d, false);
    for (const auto &s : ds.mixed) {
        for (const auto &c : s.components) {
            check_vector(c.input, d);
            check_vector(c.output, d);
            if (!(c.probability > 0.0)) {
                continue;
            }
            // The ancilla label of the component tells which column it carries.
            Eigen::Index idx = 0;
            c.input.cwiseAbs().maxCoeff(&idx);
            const auto i = static_cast<std::size_t>(idx);
            if (i % d != i / d || std::abs(std::abs(c.input[idx]) - 1.0) > 1e-9) {
                throw InvalidArgument("mixed-data inputs must be basis states |ii>");
            }
            const std::size_t label = i % d;
            const cplx phase = c.input[idx];
            for (std::size_t k = 0; k < d; ++k) {
                u(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(label)) =
                    c.output[static_cast<Eigen::Index>(k * d + label)] / phase;
            }
            seen[label] = true;
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (!seen[i]) {
            throw IncompleteDataset("no component is labelled with column " + std::to_string(i));
        }
    }
    return DenseUnitary(std::move(u), 1e-9);
}

namespace {

void write_vector(std::ostream &out, const CVector &v) {
    out << v.size();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out << ' ' << format_complex(v[i]);
    }
    out << '\n';
}

CVector read_vector(std::istream &in) {
    long len = 0;
    if (!(in >> len) || len <= 0 || len > (1L << 20)) {
        throw ParseError("bad vector length");
    }
    CVector v(len);
    std::string tok;
    for (long i = 0; i < len; ++i) {
        if (!(in >> tok)) {
            throw ParseError("truncated vector");
        }
        v[i] = parse_complex(tok);
    }
    return v;
}

void expect(std::istream &in, const std::string &word) {
    std::string tok;
    if (!(in >> tok) || tok != word) {
        throw ParseError("expected '" + word + "'");
    }
}

} // namespace

void write_dataset(std::ostream &out, const ClassicalDataset &ds) {
    out << "mode " << (ds.mode == DatasetMode::Entangled ? "entangled" : "mixed") << '\n';
    out << "n " << ds.n << '\n';
    out << "r " << ds.r << '\n';
    out << "samples " << ds.size() << '\n';
    if (ds.mode == DatasetMode::Entangled) {
        for (const auto &s : ds.entangled) {
            out << "pair\n";
            write_vector(out, s.input);
            write_vector(out, s.output);
        }
        return;
    }
    for (const auto &s : ds.mixed) {
        out << "mixture " << s.components.size() << '\n';
        for (const auto &c : s.components) {
            out << "component " << format_real(c.probability) << '\n';
            write_vector(out, c.input);
            write_vector(out, c.output);
        }
    }
}

ClassicalDataset read_dataset(std::istream &in) {
    ClassicalDataset ds;
    std::string mode;
    expect(in, "mode");
    if (!(in >> mode) || (mode != "entangled" && mode != "mixed")) {
        throw ParseError("mode must be entangled or mixed");
    }
    ds.mode = mode == "entangled" ? DatasetMode::Entangled : DatasetMode::Mixed;
    std::size_t samples = 0;
    expect(in, "n");
    if (!(in >> ds.n)) {
        throw ParseError("bad n");
    }
    expect(in, "r");
    if (!(in >> ds.r)) {
        throw ParseError("bad r");
    }
    expect(in, "samples");
    if (!(in >> samples)) {
        throw ParseError("bad sample count");
    }
    for (std::size_t s = 0; s < samples; ++s) {
        if (ds.mode == DatasetMode::Entangled) {
            expect(in, "pair");
            EntangledSample e;
            e.input = read_vector(in);
            e.output = read_vector(in);
            ds.entangled.push_back(std::move(e));
        } else {
            expect(in, "mixture");
            std::size_t m = 0;
            if (!(in >> m)) {
                throw ParseError("bad mixture size");
            }
            MixedSample ms;
            for (std::size_t c = 0; c < m; ++c) {
                expect(in, "component");
                std::string p;
                if (!(in >> p)) {
                    throw ParseError("missing component probability");
                }
                MixedComponent comp;
                comp.probability = parse_real(p);
                comp.input = read_vector(in);
                comp.output = read_vector(in);
                ms.components.push_back(std::move(comp));
            }
            ds.mixed.push_back(std::move(ms));
        }
    }
    return ds;
}

} // namespace bgc

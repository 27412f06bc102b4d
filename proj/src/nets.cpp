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

#include "bgc/nets.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "bgc/circuit_io.hpp"
#include "bgc/metrics.hpp"
#include "bgc/random.hpp"

namespace bgc {

GateSet::GateSet(std::vector<NamedGate> gates) : gates_(std::move(gates)) {
    for (const auto &g : gates_) {
        if (!(unitarity_error(g.matrix) <= kUnitarityTol)) {
            throw InvalidArgument("gate '" + g.name + "' is not unitary");
        }
    }
}

GateSet GateSet::haar(std::size_t g, Rng &rng) {
    std::vector<NamedGate> gates;
    gates.reserve(g);
    for (std::size_t i = 0; i < g; ++i) {
        gates.push_back({"h" + std::to_string(i), Gate4(sample_haar_unitary(4, rng).matrix())});
    }
    return GateSet(std::move(gates));
}

std::uint64_t GateSet::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](const std::string &s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto &g : gates_) {
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                feed(format_complex(g.matrix(r, c)));
                feed(";");
            }
        }
        feed("|");
    }
    return h;
}

GateSet GateSet::extended(const GateSet &other) const {
    std::vector<NamedGate> all = gates_;
    all.insert(all.end(), other.gates_.begin(), other.gates_.end());
    return GateSet(std::move(all));
}

const char *net_mode_name(NetMode mode) { return mode == NetMode::State ? "state" : "unitary"; }

const char *metric_name(UnitaryMetric metric) { return metric == UnitaryMetric::Davg ? "davg" : "dfprime"; }

namespace {

std::vector<int> joint_support(const std::vector<Circuit> &circuits) {
    std::vector<int> region;
    for (const auto &c : circuits) {
        region = merge_qubits(region, c.active_support());
    }
    return region;
}

void check_region_cap(const std::vector<int> &region, int cap) {
    if (static_cast<int>(region.size()) > cap) {
        throw SupportCapExceeded("net support of " + std::to_string(region.size()) +
                                 " qubits exceeds cap " + std::to_string(cap));
    }
}

PureState zero_on(int n, const std::vector<int> &region) { return PureState::zero(n).expanded(region); }

} // namespace

CandidateNet CandidateNet::from_circuits(std::vector<Circuit> circuits, NetMode mode, int support_cap) {
    CandidateNet net;
    net.mode_ = mode;
    net.size_ = circuits.size();
    if (circuits.empty()) {
        return net;
    }
    net.n_qubits_ = circuits.front().n_qubits();
    for (const auto &c : circuits) {
        if (c.n_qubits() != net.n_qubits_) {
            throw DimensionMismatch("net candidates act on different qubit counts");
        }
    }
    net.region_ = joint_support(circuits);
    check_region_cap(net.region_, mode == NetMode::Unitary ? std::min(support_cap, 12) : support_cap);
    const PureState zero = zero_on(net.n_qubits_, net.region_);
    net.states_.reserve(circuits.size());
    for (const auto &c : circuits) {
        net.states_.push_back(run_circuit(c, zero, support_cap));
        if (mode == NetMode::Unitary) {
            net.unitaries_.push_back(circuit_unitary(c, net.region_, support_cap));
        }
    }
    net.circuits_ = std::move(circuits);
    return net;
}

CandidateNet CandidateNet::from_unitaries(std::vector<DenseUnitary> unitaries, std::vector<int> region,
                                          int n_qubits) {
    CandidateNet net;
    net.mode_ = NetMode::Unitary;
    net.size_ = unitaries.size();
    net.n_qubits_ = n_qubits;
    std::sort(region.begin(), region.end());
    net.region_ = std::move(region);
    const PureState zero = zero_on(n_qubits, net.region_);
    for (const auto &u : unitaries) {
        if (u.dim() != (std::size_t{1} << net.region_.size())) {
            throw DimensionMismatch("candidate unitary does not match the region");
        }
        net.states_.push_back(apply_unitary(zero, u, net.region_, static_cast<int>(net.region_.size())));
    }
    net.unitaries_ = std::move(unitaries);
    return net;
}

CandidateNet CandidateNet::from_states(std::vector<PureState> states) {
    CandidateNet net;
    net.mode_ = NetMode::State;
    net.size_ = states.size();
    if (states.empty()) {
        return net;
    }
    net.n_qubits_ = states.front().n_total();
    for (const auto &s : states) {
        if (s.n_total() != net.n_qubits_) {
            throw DimensionMismatch("net states act on different qubit counts");
        }
        net.region_ = merge_qubits(net.region_, s.active());
    }
    for (auto &s : states) {
        s = s.expanded(net.region_);
    }
    net.states_ = std::move(states);
    return net;
}

const Circuit &CandidateNet::circuit(std::size_t i) const {
    if (circuits_.empty()) {
        throw InvalidArgument("net was not built from circuits");
    }
    return circuits_.at(i);
}

const PureState &CandidateNet::state(std::size_t i) const { return states_.at(i); }

const DenseUnitary &CandidateNet::unitary(std::size_t i) const {
    if (mode_ != NetMode::Unitary) {
        throw InvalidArgument("net is not in unitary mode");
    }
    return unitaries_.at(i);
}

CandidateNet enumerate_net(const GateSet &gate_set, const std::vector<Configuration> &configurations, int G,
                           NetMode mode, int n_qubits, std::size_t enumeration_cap, int support_cap) {
    if (G < 0) {
        throw InvalidArgument("G must be non-negative");
    }
    if (gate_set.size() == 0 && G > 0) {
        throw InvalidArgument("empty gate set");
    }
    std::size_t per_config = 1;
    for (int i = 0; i < G; ++i) {
        if (per_config > enumeration_cap / std::max<std::size_t>(gate_set.size(), 1)) {
            throw EnumerationCapExceeded("g^G exceeds the enumeration cap");
        }
        per_config *= gate_set.size();
    }
    if (configurations.size() > 0 && per_config > enumeration_cap / configurations.size()) {
        throw EnumerationCapExceeded(std::to_string(configurations.size()) + " configurations x " +
                                     std::to_string(per_config) + " assignments exceeds the cap");
    }
    for (const auto &cfg : configurations) {
        if (static_cast<int>(cfg.size()) != G) {
            throw InvalidArgument("every configuration must list exactly G target pairs");
        }
    }
    std::vector<Circuit> circuits;
    circuits.reserve(per_config * configurations.size());
    for (const auto &cfg : configurations) {
        for (std::size_t a = 0; a < per_config; ++a) {
            Circuit c(n_qubits);
            std::size_t digits = a;
            std::vector<std::size_t> choice(static_cast<std::size_t>(G));
            for (int i = G - 1; i >= 0; --i) {
                choice[static_cast<std::size_t>(i)] = digits % gate_set.size();
                digits /= gate_set.size();
            }
            for (int i = 0; i < G; ++i) {
                const auto &[q1, q2] = cfg[static_cast<std::size_t>(i)];
                c.add(gate_set[choice[static_cast<std::size_t>(i)]].matrix, q1, q2);
            }
            circuits.push_back(std::move(c));
        }
    }
    CandidateNet net = CandidateNet::from_circuits(std::move(circuits), mode, support_cap);
    net.configurations = configurations;
    net.gate_set_hash = gate_set.hash();
    return net;
}

std::vector<Configuration> all_configurations(const std::vector<int> &qubits, int G, std::size_t cap) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        for (std::size_t j = i + 1; j < qubits.size(); ++j) {
            pairs.emplace_back(qubits[i], qubits[j]);
        }
    }
    std::size_t total = 1;
    for (int i = 0; i < G; ++i) {
        if (pairs.empty() || total > cap / pairs.size()) {
            throw EnumerationCapExceeded("placement enumeration exceeds the cap");
        }
        total *= pairs.size();
    }
    std::vector<Configuration> out;
    out.reserve(total);
    for (std::size_t a = 0; a < total; ++a) {
        Configuration cfg(static_cast<std::size_t>(G));
        std::size_t digits = a;
        for (int i = G - 1; i >= 0; --i) {
            cfg[static_cast<std::size_t>(i)] = pairs[digits % pairs.size()];
            digits /= pairs.size();
        }
        out.push_back(std::move(cfg));
    }
    return out;
}

namespace {

double unitary_distance(const DenseUnitary &a, const DenseUnitary &b, UnitaryMetric metric) {
    return metric == UnitaryMetric::Davg ? davg(a, b) : df_prime(a, b);
}

} // namespace

EpsilonNetResult sample_epsilon_net(int k, double epsilon, UnitaryMetric metric, Rng &rng, std::size_t budget,
                                    std::size_t probes) {
    if (k < 1 || k > 3) {
        throw InvalidArgument("random epsilon nets are limited to 1 <= k <= 3");
    }
    if (budget == 0) {
        throw InvalidArgument("budget must be positive");
    }
    const std::size_t dim = std::size_t{1} << k;
    std::vector<DenseUnitary> probe_set;
    probe_set.reserve(probes);
    for (std::size_t i = 0; i < probes; ++i) {
        probe_set.push_back(sample_haar_unitary(dim, rng));
    }
    std::vector<std::size_t> uncovered(probes);
    for (std::size_t i = 0; i < probes; ++i) {
        uncovered[i] = i;
    }
    std::vector<DenseUnitary> elements;
    while (!uncovered.empty() && elements.size() < budget) {
        elements.push_back(sample_haar_unitary(dim, rng));
        const DenseUnitary &e = elements.back();
        std::erase_if(uncovered, [&](std::size_t p) { return unitary_distance(e, probe_set[p], metric) <= epsilon; });
    }
    std::vector<int> region(static_cast<std::size_t>(k));
    for (int q = 0; q < k; ++q) {
        region[static_cast<std::size_t>(q)] = q;
    }
    EpsilonNetResult out{CandidateNet::from_unitaries(std::move(elements), region, k), uncovered.empty()};
    return out;
}

NearestCandidate net_min_distance(const CandidateNet &net, const PureState &target) {
    if (net.empty()) {
        throw EmptyNet("cannot search an empty net");
    }
    NearestCandidate best{0, 2.0};
    for (std::size_t i = 0; i < net.size(); ++i) {
        const double d = trace_distance_pure(net.state(i), target);
        if (d < best.distance) {
            best = {i, d};
        }
    }
    return best;
}

NearestCandidate net_min_distance(const CandidateNet &net, const DenseUnitary &target, UnitaryMetric metric) {
    if (net.empty()) {
        throw EmptyNet("cannot search an empty net");
    }
    if (net.mode() != NetMode::Unitary) {
        throw InvalidArgument("unitary target needs a unitary-mode net");
    }
    NearestCandidate best{0, 1e300};
    for (std::size_t i = 0; i < net.size(); ++i) {
        const double d = unitary_distance(net.unitary(i), target, metric);
        if (d < best.distance) {
            best = {i, d};
        }
    }
    return best;
}

void write_net_manifest(std::ostream &out, const CandidateNet &net) {
    if (!net.has_circuits() && !net.empty()) {
        throw InvalidArgument("only circuit nets have a manifest");
    }
    std::ostringstream hash;
    hash << std::hex << net.gate_set_hash;
    out << "bgc-net 1\n";
    out << "mode " << net_mode_name(net.mode()) << '\n';
    out << "count " << net.size() << '\n';
    out << "gateset " << hash.str() << '\n';
    out << "configurations " << net.configurations.size() << '\n';
    for (const auto &cfg : net.configurations) {
        out << cfg.size();
        for (const auto &[a, b] : cfg) {
            out << ' ' << a << ' ' << b;
        }
        out << '\n';
    }
    for (const auto &c : net.circuits()) {
        write_circuit(out, c);
    }
}

CandidateNet read_net_manifest(std::istream &in, int support_cap) {
    std::string word, mode;
    int version = 0;
    if (!(in >> word >> version) || word != "bgc-net" || version != 1) {
        throw ParseError("not a net manifest");
    }
    std::size_t count = 0, nconf = 0;
    std::string hash;
    if (!(in >> word >> mode) || word != "mode" || (mode != "state" && mode != "unitary")) {
        throw ParseError("bad manifest mode line");
    }
    if (!(in >> word >> count) || word != "count") {
        throw ParseError("bad manifest count line");
    }
    if (!(in >> word >> hash) || word != "gateset") {
        throw ParseError("bad manifest gate-set line");
    }
    if (!(in >> word >> nconf) || word != "configurations") {
        throw ParseError("bad manifest configuration line");
    }
    std::vector<Configuration> configs(nconf);
    for (auto &cfg : configs) {
        std::size_t len = 0;
        if (!(in >> len)) {
            throw ParseError("truncated configuration list");
        }
        cfg.resize(len);
        for (auto &[a, b] : cfg) {
            if (!(in >> a >> b)) {
                throw ParseError("truncated configuration");
            }
        }
    }
    std::vector<Circuit> circuits;
    circuits.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        circuits.push_back(read_circuit(in));
    }
    CandidateNet net =
        CandidateNet::from_circuits(std::move(circuits), mode == "state" ? NetMode::State : NetMode::Unitary,
                                    support_cap);
    net.configurations = std::move(configs);
    net.gate_set_hash = std::stoull(hash, nullptr, 16);
    return net;
}

} // namespace bgc

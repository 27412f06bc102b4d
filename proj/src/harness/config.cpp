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

#include "bgc/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace bgc {

const char *case_name(SweepCase c) { return c == SweepCase::Concentrated ? "concentrated" : "random_placement"; }

const char *mode_name(SweepMode m) {
    switch (m) {
    case SweepMode::State:
        return "state";
    case SweepMode::UnitaryChoi:
        return "unitary_choi";
    case SweepMode::UnitaryNoAncilla:
        return "unitary_no_ancilla";
    }
    return "?";
}

SweepConfig::SweepConfig() {
    for (int n = 1; n <= 100; ++n) {
        N_range.push_back(n);
    }
}

SelectionRule SweepConfig::selection_rule() const {
    if (rule) {
        return *rule;
    }
    return mode == SweepMode::State ? SelectionRule::HelstromTournament : SelectionRule::OverlapArgmax;
}

void SweepConfig::validate() const {
    if (n_total < 2) {
        throw ConfigError("n_total must be at least 2");
    }
    if (G_range.empty() || N_range.empty()) {
        throw ConfigError("G_range and N_range must be nonempty");
    }
    if (trials < 1) {
        throw ConfigError("trials must be at least 1");
    }
    for (int g : G_range) {
        if (g < 0) {
            throw ConfigError("G values must be non-negative");
        }
    }
    for (int n : N_range) {
        if (n < 1) {
            throw ConfigError("N values must be positive");
        }
    }
    for (double t : fidelity_thresholds) {
        if (!(t >= 0.0 && t <= 1.0)) {
            throw ConfigError("fidelity thresholds must lie in [0, 1]");
        }
    }
    if (gate_set_size < 1) {
        throw ConfigError("gate_set_size must be at least 1");
    }
    if (concentrated_qubits < 2 || concentrated_qubits > n_total) {
        throw ConfigError("concentrated_qubits must lie in [2, n_total]");
    }
    if (mom_batches < 1) {
        throw ConfigError("mom_batches must be at least 1");
    }
    if (threads < 0) {
        throw ConfigError("threads must be non-negative");
    }
    if (scheme == ShadowScheme::Explicit) {
        throw ConfigError("sweeps need the clifford or haar scheme");
    }
    if (mode != SweepMode::State && selection_rule() == SelectionRule::HelstromTournament) {
        throw ConfigError("the tournament rule is only available in state mode");
    }
    if (mode != SweepMode::State && junta_rounds > 0) {
        throw ConfigError("junta_rounds is only available in state mode");
    }
}

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long long to_int(const std::string &text, const std::string &key) {
    long long v = 0;
    const std::string t = trim(text);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw ConfigError("'" + key + "' expects an integer, got '" + text + "'");
    }
    return v;
}

std::uint64_t to_seed(const std::string &text, const std::string &key) {
    std::uint64_t v = 0;
    const std::string t = trim(text);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw ConfigError("'" + key + "' expects an unsigned integer, got '" + text + "'");
    }
    return v;
}

bool to_bool(const std::string &text, const std::string &key) {
    const std::string t = trim(text);
    if (t == "true" || t == "1" || t == "yes") {
        return true;
    }
    if (t == "false" || t == "0" || t == "no") {
        return false;
    }
    throw ConfigError("'" + key + "' expects true or false");
}

/// The message without its "Name: " prefix.
std::string bare_message(const Error &e) {
    const std::string what = e.what();
    const auto colon = what.find(": ");
    return colon == std::string::npos ? what : what.substr(colon + 2);
}

} // namespace

std::vector<int> parse_int_range(const std::string &text) {
    const std::string t = trim(text);
    std::vector<int> out;
    const auto dots = t.find("..");
    if (dots != std::string::npos) {
        const long long a = to_int(t.substr(0, dots), "range");
        const long long b = to_int(t.substr(dots + 2), "range");
        if (b < a || b - a > 1000000) {
            throw ConfigError("bad range '" + text + "'");
        }
        for (long long v = a; v <= b; ++v) {
            out.push_back(static_cast<int>(v));
        }
        return out;
    }
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(static_cast<int>(to_int(item, "list")));
    }
    if (out.empty()) {
        throw ConfigError("empty list");
    }
    return out;
}

std::vector<double> parse_real_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(trim(text));
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string t = trim(item);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
            throw ConfigError("bad number '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ConfigError("empty list");
    }
    return out;
}

SweepConfig parse_sweep_config(std::istream &in) {
    SweepConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line.substr(0, line.find('#')));
        if (t.empty()) {
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        try {
            if (key == "case") {
                if (value == "concentrated" || value == "a") {
                    cfg.sweep_case = SweepCase::Concentrated;
                } else if (value == "random_placement" || value == "b") {
                    cfg.sweep_case = SweepCase::RandomPlacement;
                } else {
                    throw ConfigError("unknown case '" + value + "'");
                }
            } else if (key == "mode") {
                if (value == "state") {
                    cfg.mode = SweepMode::State;
                } else if (value == "unitary_choi") {
                    cfg.mode = SweepMode::UnitaryChoi;
                } else if (value == "unitary_no_ancilla") {
                    cfg.mode = SweepMode::UnitaryNoAncilla;
                } else {
                    throw ConfigError("unknown mode '" + value + "'");
                }
            } else if (key == "n_total") {
                cfg.n_total = static_cast<int>(to_int(value, key));
            } else if (key == "G_range") {
                cfg.G_range = parse_int_range(value);
            } else if (key == "N_range") {
                cfg.N_range = parse_int_range(value);
            } else if (key == "trials") {
                cfg.trials = static_cast<int>(to_int(value, key));
            } else if (key == "gate_set_seed") {
                cfg.gate_set_seed = to_seed(value, key);
            } else if (key == "trial_seed_base") {
                cfg.trial_seed_base = to_seed(value, key);
            } else if (key == "fidelity_thresholds") {
                cfg.fidelity_thresholds = parse_real_list(value);
            } else if (key == "gate_set_size") {
                cfg.gate_set_size = static_cast<std::size_t>(to_int(value, key));
            } else if (key == "fixed_gate_set") {
                cfg.fixed_gate_set = to_bool(value, key);
            } else if (key == "concentrated_qubits") {
                cfg.concentrated_qubits = static_cast<int>(to_int(value, key));
            } else if (key == "scheme") {
                cfg.scheme = parse_scheme(value);
            } else if (key == "dense_limit") {
                cfg.dense_limit = static_cast<int>(to_int(value, key));
            } else if (key == "mom_batches") {
                cfg.mom_batches = static_cast<std::size_t>(to_int(value, key));
            } else if (key == "selection_rule") {
                cfg.rule = parse_rule(value);
            } else if (key == "junta_rounds") {
                cfg.junta_rounds = static_cast<std::size_t>(to_int(value, key));
            } else if (key == "support_cap") {
                cfg.support_cap = static_cast<int>(to_int(value, key));
            } else if (key == "threads") {
                cfg.threads = static_cast<int>(to_int(value, key));
            } else {
                throw ConfigError("unknown key '" + key + "'");
            }
        } catch (const ConfigError &e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + bare_message(e));
        } catch (const ParseError &e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + bare_message(e));
        }
    }
    cfg.validate();
    return cfg;
}

SweepConfig load_sweep_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    return parse_sweep_config(in);
}

int effective_threads(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    if (const char *env = std::getenv("BGC_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) {
            n = std::min(n, cap);
        }
    }
    return std::max(1, n);
}

} // namespace bgc

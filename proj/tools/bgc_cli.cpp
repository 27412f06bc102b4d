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

// Command-line front end: sweeps, learners, metrics and net generation.
//
// Exit codes: 0 success, 1 other failures, 2 configuration or usage errors,
// 3 support or enumeration cap violations.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bgc/circuit_io.hpp"
#include "bgc/harness/config.hpp"
#include "bgc/harness/export.hpp"
#include "bgc/harness/sweep.hpp"
#include "bgc/learners.hpp"
#include "bgc/metrics.hpp"
#include "bgc/nets.hpp"
#include "bgc/oracles.hpp"

namespace {

using namespace bgc;

Circuit load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open circuit file '" + path + "'");
    }
    return read_circuit(in);
}

CandidateNet load_net(const std::string &path, int cap) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open net manifest '" + path + "'");
    }
    return read_net_manifest(in, cap);
}

/// "0-1,1-2" into a placement.
Configuration parse_placement(const std::string &text) {
    Configuration out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
            throw ConfigError("placement entries look like 0-1, got '" + item + "'");
        }
        const auto a = parse_int_range(item.substr(0, dash));
        const auto b = parse_int_range(item.substr(dash + 1));
        if (a.size() != 1 || b.size() != 1) {
            throw ConfigError("bad placement entry '" + item + "'");
        }
        out.emplace_back(a[0], b[0]);
    }
    return out;
}

struct LearnOptions {
    std::string target;
    std::string net;
    double epsilon = 0.1;
    double delta = 0.05;
    std::string scheme = "haar";
    std::string rule = "overlap_argmax";
    std::uint64_t seed = 1;
    int junta_rounds = -1;
    std::size_t batch_size = 0;
    std::size_t batches = 1;
    int cap = kDefaultSupportCap;
};

void add_learn_options(CLI::App *cmd, LearnOptions &o) {
    cmd->add_option("--target", o.target, "hidden circuit file")->required();
    cmd->add_option("--net", o.net, "net manifest file")->required();
    cmd->add_option("--epsilon", o.epsilon, "target accuracy");
    cmd->add_option("--delta", o.delta, "failure probability");
    cmd->add_option("--scheme", o.scheme, "clifford or haar");
    cmd->add_option("--rule", o.rule, "overlap_argmax or helstrom_tournament");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--junta-rounds", o.junta_rounds, "identification rounds; -1 derives them, 0 skips");
    cmd->add_option("--batch-size", o.batch_size, "snapshots per median-of-means batch; 0 derives the budget");
    cmd->add_option("--batches", o.batches, "median-of-means batches when --batch-size is set");
    cmd->add_option("--support-cap", o.cap, "largest active support");
}

LearnConfig to_config(const LearnOptions &o) {
    LearnConfig cfg;
    cfg.epsilon = o.epsilon;
    cfg.delta = o.delta;
    cfg.support_cap = o.cap;
    if (o.junta_rounds >= 0) {
        cfg.junta_rounds = static_cast<std::size_t>(o.junta_rounds);
    }
    try {
        cfg.scheme = parse_scheme(o.scheme);
        cfg.rule = parse_rule(o.rule);
        if (o.batch_size > 0) {
            cfg.mom = MedianOfMeansConfig::make(o.batch_size, o.batches);
        }
        cfg.validate();
    } catch (const ParseError &e) {
        throw ConfigError(e.what());
    } catch (const InvalidArgument &e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

void print_learn(const LearnResult &res, double quality, const char *quality_name, const char *cost_name) {
    std::cout << "index " << res.index << '\n'
              << quality_name << ' ' << format_real(quality) << '\n'
              << cost_name << ' ' << res.queries << '\n'
              << "snapshots " << res.snapshots << '\n'
              << "postselection_failures " << res.postselection_failures << '\n'
              << "support";
    for (int q : res.support.support) {
        std::cout << ' ' << q;
    }
    std::cout << '\n';
}

std::vector<int> joint_region(const Circuit &a, const Circuit &b) {
    std::vector<int> r = merge_qubits(a.active_support(), b.active_support());
    if (r.empty()) {
        r.push_back(0);
    }
    return r;
}

int run(int argc, char **argv) {
    CLI::App app{"Learning shallow circuits from copies, queries and classical data"};
    app.require_subcommand(1);

    std::string sweep_config, sweep_out, sweep_format = "csv";
    int sweep_threads = -1;
    auto *sweep = app.add_subcommand("sweep", "fidelity versus sample size sweep");
    sweep->add_option("--config", sweep_config, "key = value configuration file")->required();
    sweep->add_option("--out", sweep_out, "output file (records; CSV also writes a _summary file)");
    sweep->add_option("--format", sweep_format, "csv or json");
    sweep->add_option("--threads", sweep_threads, "worker count; overrides the config");

    LearnOptions ls;
    auto *learn_state_cmd = app.add_subcommand("learn-state", "learn a state from copies of a hidden circuit's output");
    add_learn_options(learn_state_cmd, ls);

    LearnOptions lu;
    std::string method = "choi";
    auto *learn_unitary_cmd = app.add_subcommand("learn-unitary", "learn a hidden circuit from queries");
    add_learn_options(learn_unitary_cmd, lu);
    learn_unitary_cmd->add_option("--method", method, "choi or no_ancilla");

    std::string metric_a, metric_b;
    auto *metrics_cmd = app.add_subcommand("metrics", "distances between two serialized circuits");
    metrics_cmd->add_option("a", metric_a, "first circuit file")->required();
    metrics_cmd->add_option("b", metric_b, "second circuit file")->required();

    std::size_t gs_size = 2;
    std::uint64_t gs_seed = 1, plant_seed = 1;
    int gen_G = 1, gen_n = 4, gen_cap = kDefaultSupportCap;
    std::string placement, qubits, net_mode = "state", net_out, plant_out;
    auto *gen = app.add_subcommand("gen-net", "enumerate every gate assignment over placements");
    gen->add_option("--gate-set-size", gs_size, "number of Haar-random two-qubit gates");
    gen->add_option("--gate-set-seed", gs_seed, "seed of the gate set");
    gen->add_option("--G", gen_G, "gates per circuit")->required();
    gen->add_option("--n", gen_n, "total qubits");
    auto *placement_opt = gen->add_option("--placement", placement, "known placement, e.g. 0-1,1-2");
    gen->add_option("--qubits", qubits, "enumerate all placements over these qubits, e.g. 0..3")
        ->excludes(placement_opt);
    gen->add_option("--mode", net_mode, "state or unitary");
    gen->add_option("--support-cap", gen_cap, "largest active support");
    gen->add_option("--out", net_out, "manifest file (default stdout)");
    gen->add_option("--plant", plant_out, "also write one random candidate circuit here");
    gen->add_option("--plant-seed", plant_seed, "seed for --plant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*sweep) {
        SweepConfig cfg = load_sweep_config(sweep_config);
        if (sweep_threads >= 0) {
            cfg.threads = sweep_threads;
        }
        const ExportFormat fmt = parse_export_format(sweep_format);
        const SweepResult result = run_sweep(cfg);
        if (!sweep_out.empty()) {
            export_result(result, sweep_out, fmt);
        } else if (fmt == ExportFormat::Json) {
            std::cout << result_to_json(result) << '\n';
        } else {
            write_summary_csv(std::cout, result.summaries);
        }
        std::cerr << "G,threshold,n_star_median,n_star_mean\n";
        for (const auto &c : result.curves) {
            std::cerr << c.G << ',' << c.threshold << ','
                      << (c.n_star_median ? std::to_string(*c.n_star_median) : "none") << ','
                      << (c.n_star_mean ? std::to_string(*c.n_star_mean) : "none") << '\n';
        }
        return 0;
    }
    if (*learn_state_cmd) {
        const LearnConfig cfg = to_config(ls);
        const Circuit target = load_circuit(ls.target);
        const CandidateNet net = load_net(ls.net, ls.cap);
        StateOracle oracle = StateOracle::from_circuit(target, ls.cap);
        Rng rng(ls.seed);
        const LearnResult res = learn_state(oracle, net, cfg, rng);
        print_learn(res, fidelity_pure(oracle.reveal(), net.state(res.index)), "fidelity", "copies");
        return 0;
    }
    if (*learn_unitary_cmd) {
        const LearnConfig cfg = to_config(lu);
        const Circuit target = load_circuit(lu.target);
        const CandidateNet net = load_net(lu.net, lu.cap);
        UnitaryOracle oracle(target, lu.cap);
        Rng rng(lu.seed);
        LearnResult res;
        if (method == "choi") {
            res = learn_unitary_choi(oracle, net, cfg, rng);
        } else if (method == "no_ancilla") {
            res = learn_unitary_no_ancilla(oracle, net, cfg, rng);
        } else {
            throw ConfigError("unknown method '" + method + "'");
        }
        const Circuit &chosen = net.circuit(res.index);
        const auto region = joint_region(target, chosen);
        print_learn(res, davg(circuit_unitary(target, region, lu.cap), circuit_unitary(chosen, region, lu.cap)),
                    "d_avg", "queries");
        return 0;
    }
    if (*metrics_cmd) {
        const Circuit a = load_circuit(metric_a);
        const Circuit b = load_circuit(metric_b);
        if (a.n_qubits() != b.n_qubits()) {
            throw DimensionMismatch("circuits act on different qubit counts");
        }
        const auto region = joint_region(a, b);
        const DenseUnitary ua = circuit_unitary(a, region);
        const DenseUnitary ub = circuit_unitary(b, region);
        const PureState zero = PureState::zero(a.n_qubits());
        const PureState sa = run_circuit(a, zero);
        const PureState sb = run_circuit(b, zero);
        std::cout << "qubits " << region.size() << '\n'
                  << "d_avg " << format_real(davg(ua, ub)) << '\n'
                  << "d_F' " << format_real(df_prime(ua, ub)) << '\n'
                  << "d_2' " << format_real(d2_prime(ua, ub)) << '\n'
                  << "d_diamond " << format_real(diamond_distance(ua, ub)) << '\n'
                  << "d_tr_choi " << format_real(trace_distance_pure(choi_state(ua).state, choi_state(ub).state))
                  << '\n'
                  << "d_tr_output " << format_real(trace_distance_pure(sa, sb)) << '\n'
                  << "fidelity_output " << format_real(fidelity_pure(sa, sb)) << '\n';
        return 0;
    }
    if (*gen) {
        Rng gs_rng(derive_seed(gs_seed));
        const GateSet gates = GateSet::haar(gs_size, gs_rng);
        std::vector<Configuration> configs;
        if (!placement.empty()) {
            configs.push_back(parse_placement(placement));
        } else if (!qubits.empty()) {
            configs = all_configurations(parse_int_range(qubits), gen_G);
        } else {
            throw ConfigError("gen-net needs --placement or --qubits");
        }
        NetMode mode = NetMode::State;
        if (net_mode == "unitary") {
            mode = NetMode::Unitary;
        } else if (net_mode != "state") {
            throw ConfigError("unknown net mode '" + net_mode + "'");
        }
        const CandidateNet net = enumerate_net(gates, configs, gen_G, mode, gen_n, kDefaultEnumerationCap, gen_cap);
        if (net_out.empty()) {
            write_net_manifest(std::cout, net);
        } else {
            std::ofstream out(net_out);
            if (!out) {
                throw IoError("cannot write '" + net_out + "'");
            }
            write_net_manifest(out, net);
        }
        if (!plant_out.empty()) {
            Rng pr(derive_seed(plant_seed));
            const std::size_t idx = std::uniform_int_distribution<std::size_t>(0, net.size() - 1)(pr);
            std::ofstream out(plant_out);
            if (!out) {
                throw IoError("cannot write '" + plant_out + "'");
            }
            write_circuit(out, net.circuit(idx));
            std::cerr << "planted candidate " << idx << " of " << net.size() << '\n';
        }
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const bgc::ConfigError &e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const bgc::SupportCapExceeded &e) {
        std::cerr << e.what() << '\n';
        return 3;
    } catch (const bgc::EnumerationCapExceeded &e) {
        std::cerr << e.what() << '\n';
        return 3;
    } catch (const std::exception &e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
}

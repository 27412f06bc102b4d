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

#include "bgc/harness/export.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bgc/circuit_io.hpp"

namespace bgc {

namespace {

using nlohmann::json;

const char *kRecordHeader = "G,N,trial,fidelity";
const char *kSummaryHeader = "G,N,mean_fidelity,median_fidelity";

std::ofstream open_out(const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
    return out;
}

int parse_int_field(const std::string &text, int line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) {
            throw ParseError("trailing characters");
        }
        return v;
    } catch (const std::exception &) {
        throw ParseError("line " + std::to_string(line) + ": bad integer '" + text + "'");
    }
}

} // namespace

ExportFormat parse_export_format(const std::string &name) {
    if (name == "csv") {
        return ExportFormat::Csv;
    }
    if (name == "json") {
        return ExportFormat::Json;
    }
    throw ConfigError("unknown export format '" + name + "'");
}

std::string summary_path(const std::string &path) {
    const std::string ext = ".csv";
    if (path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
        return path.substr(0, path.size() - ext.size()) + "_summary.csv";
    }
    return path + "_summary.csv";
}

void write_records_csv(std::ostream &out, const std::vector<SweepRecord> &records) {
    out << kRecordHeader << '\n';
    for (const auto &r : records) {
        out << r.G << ',' << r.N << ',' << r.trial << ',' << format_real(r.fidelity) << '\n';
    }
}

std::vector<SweepRecord> read_records_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != kRecordHeader) {
        throw ParseError("missing header '" + std::string(kRecordHeader) + "'");
    }
    std::vector<SweepRecord> records;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        std::stringstream ss(line);
        std::string f[4];
        for (int i = 0; i < 4; ++i) {
            if (!std::getline(ss, f[i], ',')) {
                throw ParseError("line " + std::to_string(lineno) + ": expected 4 fields");
            }
        }
        records.push_back({parse_int_field(f[0], lineno), parse_int_field(f[1], lineno),
                           parse_int_field(f[2], lineno), parse_real(f[3])});
    }
    return records;
}

void write_summary_csv(std::ostream &out, const std::vector<SweepSummary> &summaries) {
    out << kSummaryHeader << '\n';
    for (const auto &s : summaries) {
        out << s.G << ',' << s.N << ',' << format_real(s.mean_fidelity) << ',' << format_real(s.median_fidelity)
            << '\n';
    }
}

std::string result_to_json(const SweepResult &result) {
    json records = json::array();
    for (const auto &r : result.records) {
        records.push_back({{"G", r.G}, {"N", r.N}, {"trial", r.trial}, {"fidelity", r.fidelity}});
    }
    json summaries = json::array();
    for (const auto &s : result.summaries) {
        summaries.push_back(
            {{"G", s.G}, {"N", s.N}, {"mean_fidelity", s.mean_fidelity}, {"median_fidelity", s.median_fidelity}});
    }
    json curves = json::array();
    for (const auto &c : result.curves) {
        json row{{"G", c.G}, {"threshold", c.threshold}};
        row["n_star_median"] = c.n_star_median ? json(*c.n_star_median) : json(nullptr);
        row["n_star_mean"] = c.n_star_mean ? json(*c.n_star_mean) : json(nullptr);
        curves.push_back(row);
    }
    return json{{"records", records}, {"summaries", summaries}, {"sample_complexity", curves}}.dump(1);
}

SweepResult result_from_json(const std::string &text) {
    SweepResult result;
    try {
        const json doc = json::parse(text);
        for (const auto &r : doc.at("records")) {
            result.records.push_back(
                {r.at("G").get<int>(), r.at("N").get<int>(), r.at("trial").get<int>(), r.at("fidelity").get<double>()});
        }
        for (const auto &s : doc.value("summaries", json::array())) {
            result.summaries.push_back({s.at("G").get<int>(), s.at("N").get<int>(),
                                        s.at("mean_fidelity").get<double>(), s.at("median_fidelity").get<double>()});
        }
        for (const auto &c : doc.value("sample_complexity", json::array())) {
            SampleComplexity sc{c.at("G").get<int>(), c.at("threshold").get<double>(), std::nullopt, std::nullopt};
            if (!c.at("n_star_median").is_null()) {
                sc.n_star_median = c.at("n_star_median").get<int>();
            }
            if (!c.at("n_star_mean").is_null()) {
                sc.n_star_mean = c.at("n_star_mean").get<int>();
            }
            result.curves.push_back(sc);
        }
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad sweep JSON: ") + e.what());
    }
    return result;
}

void export_result(const SweepResult &result, const std::string &path, ExportFormat format) {
    if (format == ExportFormat::Json) {
        auto out = open_out(path);
        out << result_to_json(result) << '\n';
        return;
    }
    auto out = open_out(path);
    write_records_csv(out, result.records);
    auto summary = open_out(summary_path(path));
    write_summary_csv(summary, result.summaries);
    if (!out || !summary) {
        throw IoError("write to '" + path + "' failed");
    }
}

SweepResult import_result(const std::string &path, ExportFormat format, const std::vector<double> &thresholds) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    SweepResult result;
    if (format == ExportFormat::Json) {
        std::stringstream buf;
        buf << in.rdbuf();
        result.records = result_from_json(buf.str()).records;
    } else {
        result.records = read_records_csv(in);
    }
    summarize(result, thresholds);
    return result;
}

} // namespace bgc

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
 * CSV and JSON export of sweep results, with import for round trips.
 *
 * CSV export writes the records to `path` and the per-(G, N) statistics to a
 * companion file named by summary_path(). Fidelities are written with 17
 * significant digits so that import reproduces them exactly.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bgc/harness/sweep.hpp"

namespace bgc {

enum class ExportFormat { Csv, Json };

ExportFormat parse_export_format(const std::string &name);

/// `out.csv` becomes `out_summary.csv`; other names get `_summary.csv` appended.
std::string summary_path(const std::string &path);

void write_records_csv(std::ostream &out, const std::vector<SweepRecord> &records);
std::vector<SweepRecord> read_records_csv(std::istream &in);
void write_summary_csv(std::ostream &out, const std::vector<SweepSummary> &summaries);

std::string result_to_json(const SweepResult &result);
SweepResult result_from_json(const std::string &text);

/// Throws IoError when a file cannot be written.
void export_result(const SweepResult &result, const std::string &path, ExportFormat format);

/// Reads records back from either format; summaries are recomputed.
SweepResult import_result(const std::string &path, ExportFormat format,
                          const std::vector<double> &thresholds = {0.999});

} // namespace bgc

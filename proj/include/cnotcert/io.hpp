// Copyright 2026 The cnotcert Authors
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

#ifndef CNOTCERT_IO_HPP_
#define CNOTCERT_IO_HPP_

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cnotcert/channels.hpp"
#include "cnotcert/entanglement.hpp"
#include "cnotcert/fidelity.hpp"
#include "cnotcert/sampling.hpp"

// File formats and the command implementations behind the CLI. Counts and
// report files are single JSON documents with a format_version gate; writes
// are whole-file atomic (temp file + rename) and deterministic, so repeating
// a seeded simulation reproduces the file byte for byte.

namespace cnotcert {

/// Raised for malformed counts files; the message carries the JSON path and
/// the offending or missing key.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CountsSettingBlock {
  BasisSetting setting;
  std::vector<CountsRecord> records;
};

/// On-disk counts document: format_version (= 1), a free-form string-valued
/// metadata map that must include "synthetic" ("true"/"false"), and one block
/// per measurement setting. Files need the three canonical settings to be
/// evaluable; extra settings are ignored with a warning.
struct CountsFile {
  int format_version = 1;
  std::map<std::string, std::string> metadata;
  std::vector<CountsSettingBlock> settings;
};

nlohmann::json counts_file_to_json(const CountsFile& file);
CountsFile counts_file_from_json(const nlohmann::json& j);

CountsFile load_counts_file(const std::filesystem::path& path);
void save_counts_file(const std::filesystem::path& path,
                      const CountsFile& file);

/// Evaluation results in serializable form.
struct Report {
  int format_version = 1;
  FidelityTriple fidelities;
  /// Per-fidelity binomial standard error sqrt(F (1-F) / n_total), with
  /// n_total the total shots of that fidelity's setting.
  std::array<double, 3> standard_errors{};
  PeEstimate pe;
  double equality_tol = 0.01;
  std::array<ProbabilityTable, 3> tables;  // ZZ, XX, XZ->YY
  ExpansionCoefficients coefficients;
  bool reconstruction_is_cp = false;
  /// Diagnostics (for example ignored extra settings); not serialized.
  std::vector<std::string> warnings;
};

nlohmann::json report_to_json(const Report& report);
void save_report(const std::filesystem::path& path, const Report& report);

/// Tables, fidelities with standard errors, criterion, p_E estimate,
/// concurrence bound and the dephasing-model reconstruction coefficients.
Report evaluate_counts(const CountsFile& file, double equality_tol = 0.01);

struct VerifyCheck {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;
  bool all_pass = false;
};

/// The expansion identity plus CP/TP residuals of the five named channels,
/// each compared against tol.
VerifyResult run_verify(double tol);

/// Simulate the three canonical settings and write a counts file. Metadata
/// records the generation parameters and marks the file synthetic.
CountsFile run_simulate(const NoiseParams& params, std::uint64_t shots,
                        std::uint64_t seed, const std::filesystem::path& out);

/// Load, evaluate and (when out is nonempty) write the report.
Report run_evaluate(const std::filesystem::path& counts_path,
                    const std::filesystem::path& out,
                    double equality_tol = 0.01);

/// Write the fidelity reconstruction: coefficients, 16x16 transfer matrix,
/// Choi matrix and CP/TP flags. Complex entries serialize as [re, im].
nlohmann::json run_channel(double f1, double f2, double f3,
                           const std::filesystem::path& out);

/// The measurement plan as 16 text lines grouped by setting.
std::vector<std::string> plan_lines();
nlohmann::json plan_to_json();

}  // namespace cnotcert

#endif  // CNOTCERT_IO_HPP_

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

#include "cnotcert/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cnotcert {

namespace {

using nlohmann::json;

const char* kOutcomeKeys[4] = {"00", "01", "10", "11"};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Pauli parse_basis_label(const json& j, const std::string& path) {
  if (!j.is_string())
    throw SchemaError(path + ": basis label must be a string");
  const std::string s = j.get<std::string>();
  if (s == "X") return Pauli::X;
  if (s == "Y") return Pauli::Y;
  if (s == "Z") return Pauli::Z;
  throw SchemaError(path + ": basis label \"" + s +
                    "\" is not one of X, Y, Z");
}

const json& require_key(const json& obj, const char* key,
                        const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end())
    throw SchemaError(path + ": missing required key \"" + key + "\"");
  return *it;
}

std::array<Pauli, 2> parse_basis_pair(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2)
    throw SchemaError(path + ": expected an array of two basis labels");
  return {parse_basis_label(j[0], path + "[0]"),
          parse_basis_label(j[1], path + "[1]")};
}

json basis_pair_to_json(Pauli a, Pauli b) {
  return json::array({pauli_name(a), pauli_name(b)});
}

CountsRecord parse_record(const json& j, const BasisSetting& setting,
                          const std::string& path) {
  CountsRecord record;
  record.setting = setting;
  const json& input = require_key(j, "input", path);
  if (!input.is_string() || parse_label(input.get<std::string>()) < 0)
    throw SchemaError(path + ": \"input\" must be one of 00, 01, 10, 11");
  record.input = parse_label(input.get<std::string>());
  const json& counts = require_key(j, "counts", path);
  if (!counts.is_object())
    throw SchemaError(path + ": \"counts\" must be an object");
  if (counts.size() != 4)
    throw SchemaError(path + ": \"counts\" must hold exactly the four "
                             "outcome keys 00, 01, 10, 11");
  for (int out = 0; out < 4; ++out) {
    const auto it = counts.find(kOutcomeKeys[out]);
    if (it == counts.end())
      throw SchemaError(path + ".counts: missing outcome key \"" +
                        kOutcomeKeys[out] + "\"");
    if (!it->is_number_integer() || it->get<std::int64_t>() < 0)
      throw SchemaError(path + ".counts[\"" + kOutcomeKeys[out] +
                        "\"]: count must be a nonnegative integer");
    record.counts[out] = it->get<std::uint64_t>();
  }
  return record;
}

// Finds the block matching a canonical setting; complains about duplicates.
int find_setting(const CountsFile& file, const BasisSetting& want) {
  int found = -1;
  for (std::size_t i = 0; i < file.settings.size(); ++i) {
    if (file.settings[i].setting == want) {
      if (found >= 0)
        throw SchemaError("counts file holds duplicate blocks for setting " +
                          want.describe());
      found = static_cast<int>(i);
    }
  }
  return found;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  if (path.empty()) throw std::runtime_error("empty output path");
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot open " + tmp.string() +
                               " for writing");
    out << content;
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

json complex_matrix_to_json(const Mat16& m) {
  json rows = json::array();
  for (int r = 0; r < 16; ++r) {
    json row = json::array();
    for (int c = 0; c < 16; ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

json table_to_json(const ProbabilityTable& table) {
  json probs = json::array();
  for (int in = 0; in < 4; ++in) {
    json row = json::array();
    for (int out = 0; out < 4; ++out) row.push_back(table.probs(in, out));
    probs.push_back(std::move(row));
  }
  json inputs = json::array();
  for (int in = 0; in < 4; ++in) inputs.push_back(label_text(in));
  return json{{"input_basis",
               basis_pair_to_json(table.setting.in1, table.setting.in2)},
              {"output_basis",
               basis_pair_to_json(table.setting.out1, table.setting.out2)},
              {"inputs", inputs},
              {"outcomes", inputs},
              {"probs", probs}};
}

const char* fidelity_tag(const BasisSetting& setting) {
  if (setting == setting_zz()) return "F1";
  if (setting == setting_xx()) return "F2";
  return "F3";
}

}  // namespace

json counts_file_to_json(const CountsFile& file) {
  json settings = json::array();
  for (const CountsSettingBlock& block : file.settings) {
    json records = json::array();
    for (const CountsRecord& record : block.records) {
      json counts;
      for (int out = 0; out < 4; ++out)
        counts[kOutcomeKeys[out]] = record.counts[out];
      records.push_back(json{{"input", label_text(record.input)},
                             {"counts", std::move(counts)}});
    }
    settings.push_back(
        json{{"input_basis",
              basis_pair_to_json(block.setting.in1, block.setting.in2)},
             {"output_basis",
              basis_pair_to_json(block.setting.out1, block.setting.out2)},
             {"records", std::move(records)}});
  }
  return json{{"format_version", file.format_version},
              {"metadata", file.metadata},
              {"settings", std::move(settings)}};
}

CountsFile counts_file_from_json(const json& j) {
  CountsFile file;
  const json& version = require_key(j, "format_version", "counts file");
  if (!version.is_number_integer() || version.get<int>() != 1)
    throw SchemaError("counts file: unsupported format_version (expected 1)");
  file.format_version = 1;

  const json& metadata = require_key(j, "metadata", "counts file");
  if (!metadata.is_object())
    throw SchemaError("counts file: \"metadata\" must be an object");
  for (const auto& [key, value] : metadata.items()) {
    if (!value.is_string())
      throw SchemaError("counts file: metadata[\"" + key +
                        "\"] must be a string");
    file.metadata[key] = value.get<std::string>();
  }
  const auto synthetic = file.metadata.find("synthetic");
  if (synthetic == file.metadata.end())
    throw SchemaError("counts file: metadata: missing required key "
                      "\"synthetic\"");
  if (synthetic->second != "true" && synthetic->second != "false")
    throw SchemaError(
        "counts file: metadata[\"synthetic\"] must be \"true\" or \"false\"");

  const json& settings = require_key(j, "settings", "counts file");
  if (!settings.is_array())
    throw SchemaError("counts file: \"settings\" must be an array");
  for (std::size_t i = 0; i < settings.size(); ++i) {
    const std::string path = "settings[" + std::to_string(i) + "]";
    const json& block_json = settings[i];
    CountsSettingBlock block;
    const std::array<Pauli, 2> in = parse_basis_pair(
        require_key(block_json, "input_basis", path), path + ".input_basis");
    const std::array<Pauli, 2> out = parse_basis_pair(
        require_key(block_json, "output_basis", path), path + ".output_basis");
    block.setting = {in[0], in[1], out[0], out[1]};
    const json& records = require_key(block_json, "records", path);
    if (!records.is_array())
      throw SchemaError(path + ": \"records\" must be an array");
    for (std::size_t r = 0; r < records.size(); ++r)
      block.records.push_back(
          parse_record(records[r], block.setting,
                       path + ".records[" + std::to_string(r) + "]"));
    file.settings.push_back(std::move(block));
  }
  return file;
}

CountsFile load_counts_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": not valid JSON: " + e.what());
  }
  return counts_file_from_json(j);
}

void save_counts_file(const std::filesystem::path& path,
                      const CountsFile& file) {
  write_file_atomic(path, counts_file_to_json(file).dump(2) + "\n");
}

json report_to_json(const Report& report) {
  const FidelityTriple& f = report.fidelities;
  json pe;
  if (report.pe.value.has_value()) {
    pe = json{{"value", *report.pe.value},
              {"equality_tol", report.equality_tol}};
  } else {
    pe = json{{"value", nullptr},
              {"equality_tol", report.equality_tol},
              {"reason", report.pe.reason}};
  }
  json tables = json::array();
  for (const ProbabilityTable& table : report.tables)
    tables.push_back(table_to_json(table));
  return json{
      {"format_version", report.format_version},
      {"fidelities",
       {{"f1", f.f1},
        {"f2", f.f2},
        {"f3", f.f3},
        {"standard_errors",
         {{"f1", report.standard_errors[0]},
          {"f2", report.standard_errors[1]},
          {"f3", report.standard_errors[2]}}}}},
      {"sum", f.sum()},
      {"parallelism_number", f.parallelism_number()},
      {"criterion_met", f.criterion_met()},
      {"p_e_estimate", std::move(pe)},
      {"concurrence",
       {{"bound_from_fidelities", bound_from_fidelities(f)},
        {"bound_from_correlations", nullptr}}},
      {"tables", std::move(tables)},
      {"channel_reconstruction",
       {{"coefficients",
         {{"l1", report.coefficients.l1},
          {"l2", report.coefficients.l2},
          {"l3", report.coefficients.l3},
          {"dephase", report.coefficients.dephase}}},
        {"is_cp", report.reconstruction_is_cp},
        {"choi_available", false}}}};
}

void save_report(const std::filesystem::path& path, const Report& report) {
  write_file_atomic(path, report_to_json(report).dump(2) + "\n");
}

Report evaluate_counts(const CountsFile& file, double equality_tol) {
  Report report;
  report.equality_tol = equality_tol;

  const std::array<BasisSetting, 3> canonical = canonical_settings();
  std::array<int, 3> block_of{};
  for (std::size_t k = 0; k < canonical.size(); ++k) {
    const int idx = find_setting(file, canonical[k]);
    if (idx < 0)
      throw SchemaError("counts file is missing required setting " +
                        canonical[k].describe());
    block_of[k] = idx;
  }
  for (std::size_t i = 0; i < file.settings.size(); ++i) {
    if (static_cast<int>(i) != block_of[0] &&
        static_cast<int>(i) != block_of[1] &&
        static_cast<int>(i) != block_of[2])
      report.warnings.push_back("ignoring extra setting " +
                                file.settings[i].setting.describe());
  }

  std::array<double, 3> fs{};
  for (std::size_t k = 0; k < canonical.size(); ++k) {
    const CountsSettingBlock& block =
        file.settings[static_cast<std::size_t>(block_of[k])];
    ProbabilityTable table{canonical[k], Eigen::Matrix4d::Zero()};
    try {
      table = counts_to_table(block.records);
    } catch (const std::invalid_argument& e) {
      throw SchemaError("settings[" + std::to_string(block_of[k]) +
                        "] (" + canonical[k].describe() + "): " + e.what());
    }
    report.tables[k] = table;
    switch (k) {
      case 0: fs[0] = fidelity_f1(table); break;
      case 1: fs[1] = fidelity_f2(table); break;
      default: fs[2] = fidelity_f3(table); break;
    }
    std::uint64_t total_shots = 0;
    for (const CountsRecord& record : block.records)
      total_shots += record.shots();
    report.standard_errors[k] = std::sqrt(
        std::max(0.0, fs[k] * (1.0 - fs[k])) /
        static_cast<double>(total_shots));
  }

  report.fidelities = {fs[0], fs[1], fs[2]};
  report.pe = p_e_estimate(report.fidelities, equality_tol);
  report.coefficients =
      ExpansionCoefficients::from_fidelities(fs[0], fs[1], fs[2]);
  report.reconstruction_is_cp =
      is_cp(reconstruct_from_fidelities(fs[0], fs[1], fs[2]));
  return report;
}

VerifyResult run_verify(double tol) {
  if (!(tol > 0.0))
    throw std::invalid_argument("verify: tolerance must be positive");
  VerifyResult result;
  result.checks.push_back({"expansion identity CNOT = L1+L2+L3-2D",
                           expansion_residual(), false});
  for (ChannelName name : {ChannelName::CNOT, ChannelName::DEPHASE,
                           ChannelName::L1, ChannelName::L2, ChannelName::L3}) {
    const NamedChannel ch = channel(name);
    const double cp_defect = std::max(0.0, -choi_min_eigenvalue(ch.superop));
    result.checks.push_back(
        {std::string(channel_name(name)) + " complete positivity", cp_defect,
         false});
    result.checks.push_back(
        {std::string(channel_name(name)) + " trace preservation",
         tp_residual(ch.superop), false});
  }
  result.all_pass = true;
  for (VerifyCheck& check : result.checks) {
    check.pass = check.residual < tol;
    result.all_pass = result.all_pass && check.pass;
  }
  return result;
}

CountsFile run_simulate(const NoiseParams& params, std::uint64_t shots,
                        std::uint64_t seed,
                        const std::filesystem::path& out) {
  const SuperOperator channel = build_noisy_channel(params);
  const std::vector<CountsRecord> records =
      sample_canonical(channel, shots, seed);

  CountsFile file;
  file.metadata["synthetic"] = "true";
  file.metadata["model"] = noise_model_name(params.model);
  file.metadata["strength"] = format_double(params.strength);
  file.metadata["shots_per_input"] = std::to_string(shots);
  file.metadata["seed"] = std::to_string(seed);
  file.metadata["rng"] = "splitmix64 inverse-cdf v1";
  for (const BasisSetting& setting : canonical_settings()) {
    CountsSettingBlock block;
    block.setting = setting;
    for (const CountsRecord& record : records)
      if (record.setting == setting) block.records.push_back(record);
    file.settings.push_back(std::move(block));
  }
  save_counts_file(out, file);
  return file;
}

Report run_evaluate(const std::filesystem::path& counts_path,
                    const std::filesystem::path& out, double equality_tol) {
  const CountsFile file = load_counts_file(counts_path);
  Report report = evaluate_counts(file, equality_tol);
  if (!out.empty()) save_report(out, report);
  return report;
}

json run_channel(double f1, double f2, double f3,
                 const std::filesystem::path& out) {
  const SuperOperator rec = reconstruct_from_fidelities(f1, f2, f3);
  const ExpansionCoefficients c =
      ExpansionCoefficients::from_fidelities(f1, f2, f3);
  json j{{"format_version", 1},
         {"fidelities", {{"f1", f1}, {"f2", f2}, {"f3", f3}}},
         {"coefficients",
          {{"l1", c.l1}, {"l2", c.l2}, {"l3", c.l3}, {"dephase", c.dephase}}},
         {"superoperator", complex_matrix_to_json(rec.matrix())},
         {"choi", complex_matrix_to_json(choi_of(rec))},
         {"is_cp", is_cp(rec)},
         {"is_tp", is_tp(rec)}};
  if (!out.empty()) write_file_atomic(out, j.dump(2) + "\n");
  return j;
}

std::vector<std::string> plan_lines() {
  std::vector<std::string> lines;
  for (const PlanEntry& entry : measurement_plan()) {
    std::ostringstream line;
    line << fidelity_tag(entry.setting) << "  " << entry.setting.describe()
         << "  input " << label_text(entry.input) << "  outcome "
         << label_text(entry.outcome);
    lines.push_back(line.str());
  }
  return lines;
}

json plan_to_json() {
  json entries = json::array();
  for (const PlanEntry& entry : measurement_plan()) {
    entries.push_back(
        json{{"fidelity", fidelity_tag(entry.setting)},
             {"input_basis",
              basis_pair_to_json(entry.setting.in1, entry.setting.in2)},
             {"output_basis",
              basis_pair_to_json(entry.setting.out1, entry.setting.out2)},
             {"input", label_text(entry.input)},
             {"outcome", label_text(entry.outcome)}});
  }
  return entries;
}

}  // namespace cnotcert

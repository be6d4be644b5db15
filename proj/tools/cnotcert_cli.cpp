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

// Command-line front end. Exit codes: 0 success, 1 validation or criterion
// failure, 2 I/O or schema error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cnotcert/io.hpp"

namespace {

using namespace cnotcert;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitIo = 2;

int cmd_verify(double tol) {
  const VerifyResult result = run_verify(tol);
  for (const VerifyCheck& check : result.checks)
    std::printf("%-42s residual %.3e  %s\n", check.name.c_str(),
                check.residual, check.pass ? "PASS" : "FAIL");
  return result.all_pass ? kExitOk : kExitFail;
}

int cmd_simulate(const std::string& model, double strength,
                 std::uint64_t shots, std::uint64_t seed,
                 const std::string& out) {
  const NoiseParams params{parse_noise_model(model), strength};
  run_simulate(params, shots, seed, out);
  std::cout << "wrote " << out << " (" << model << " strength " << strength
            << ", " << shots << " shots/input, seed " << seed << ")\n";
  return kExitOk;
}

int cmd_evaluate(const std::string& counts, const std::string& out,
                 double equality_tol) {
  const Report report = run_evaluate(counts, out, equality_tol);
  for (const std::string& warning : report.warnings)
    std::cerr << "warning: " << warning << "\n";
  const FidelityTriple& f = report.fidelities;
  std::printf("F1 = %.6f +- %.6f\n", f.f1, report.standard_errors[0]);
  std::printf("F2 = %.6f +- %.6f\n", f.f2, report.standard_errors[1]);
  std::printf("F3 = %.6f +- %.6f\n", f.f3, report.standard_errors[2]);
  std::printf("sum = %.6f, parallel operations = %.6f\n", f.sum(),
              f.parallelism_number());
  std::printf("quantum parallelism (sum > 2): %s\n",
              f.criterion_met() ? "certified" : "not certified");
  if (report.pe.value.has_value())
    std::printf("p_E estimate = %.6f\n", *report.pe.value);
  else
    std::printf("p_E estimate: n/a (%s)\n", report.pe.reason.c_str());
  std::printf("concurrence bound (fidelities) = %.6f\n",
              bound_from_fidelities(f));
  std::printf("reconstruction completely positive: %s\n",
              report.reconstruction_is_cp ? "yes" : "no");
  if (!out.empty()) std::cout << "report written to " << out << "\n";
  return f.criterion_met() ? kExitOk : kExitFail;
}

int cmd_channel(double f1, double f2, double f3, const std::string& out) {
  const nlohmann::json j = run_channel(f1, f2, f3, out);
  std::printf("coefficients: l1 = %.6f, l2 = %.6f, l3 = %.6f, dephase = %.6f\n",
              j["coefficients"]["l1"].get<double>(),
              j["coefficients"]["l2"].get<double>(),
              j["coefficients"]["l3"].get<double>(),
              j["coefficients"]["dephase"].get<double>());
  std::printf("is_cp: %s, is_tp: %s\n",
              j["is_cp"].get<bool>() ? "true" : "false",
              j["is_tp"].get<bool>() ? "true" : "false");
  if (!out.empty()) std::cout << "reconstruction written to " << out << "\n";
  return kExitOk;
}

int cmd_plan(bool as_json) {
  if (as_json) {
    std::cout << plan_to_json().dump(2) << "\n";
  } else {
    for (const std::string& line : plan_lines()) std::cout << line << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Controlled-NOT gate characterization from three classical "
               "truth tables"};
  app.require_subcommand(1);

  double tol = 1e-12;
  CLI::App* verify =
      app.add_subcommand("verify", "Check the exact channel identities");
  verify->add_option("--tol", tol, "residual tolerance")
      ->capture_default_str();

  std::string model = "werner";
  double strength = 0.5;
  std::uint64_t shots = 10000;
  std::uint64_t seed = 1;
  std::string sim_out;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Sample shot counts for the three canonical settings");
  simulate->add_option("--model", model,
                       "werner | zx_dephase | depolarize | local_flip")
      ->capture_default_str();
  simulate->add_option("--strength", strength, "noise parameter in [0,1]")
      ->capture_default_str();
  simulate->add_option("--shots", shots, "shots per input")
      ->capture_default_str();
  simulate->add_option("--seed", seed, "RNG seed")->capture_default_str();
  simulate->add_option("--out", sim_out, "counts file to write")->required();

  std::string counts_path;
  std::string report_out;
  double equality_tol = 0.01;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Evaluate a counts file; exits 1 when the parallelism "
                  "criterion is not met");
  evaluate->add_option("--counts", counts_path, "counts file to evaluate")
      ->required();
  evaluate->add_option("--out", report_out, "report file to write");
  evaluate
      ->add_option("--equality-tol", equality_tol,
                   "max fidelity spread for the p_E estimate")
      ->capture_default_str();

  double f1 = 1.0, f2 = 1.0, f3 = 1.0;
  std::string channel_out;
  CLI::App* channel = app.add_subcommand(
      "channel", "Reconstruct the noisy channel from three fidelities");
  channel->add_option("f1", f1, "computational-basis fidelity")->required();
  channel->add_option("f2", f2, "X-basis fidelity")->required();
  channel->add_option("f3", f3, "XZ->YY fidelity")->required();
  channel->add_option("--out", channel_out, "reconstruction file to write");

  bool plan_json = false;
  CLI::App* plan = app.add_subcommand(
      "plan", "Print the 16-outcome / 12-input measurement plan");
  plan->add_flag("--json", plan_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFail;
  }

  try {
    if (verify->parsed()) return cmd_verify(tol);
    if (simulate->parsed())
      return cmd_simulate(model, strength, shots, seed, sim_out);
    if (evaluate->parsed())
      return cmd_evaluate(counts_path, report_out, equality_tol);
    if (channel->parsed()) return cmd_channel(f1, f2, f3, channel_out);
    if (plan->parsed()) return cmd_plan(plan_json);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

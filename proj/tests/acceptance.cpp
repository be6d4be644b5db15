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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cnotcert/batch.hpp"
#include "cnotcert/channels.hpp"
#include "cnotcert/entanglement.hpp"
#include "cnotcert/fidelity.hpp"
#include "cnotcert/io.hpp"
#include "cnotcert/random.hpp"
#include "cnotcert/sampling.hpp"

using namespace cnotcert;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool within(double value, double target, double tol) {
  return std::abs(value - target) <= tol;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// 1. The ideal gate equals L1 + L2 + L3 - 2 DEPHASE to better than 1e-12.
bool expansion_identity(std::string& detail) {
  const double residual = expansion_residual();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "residual %.3e", residual);
  detail = buf;
  return residual < 1e-12;
}

// 2. The canonical fidelity table of the five named channels.
bool canonical_fidelities(std::string& detail) {
  const struct {
    ChannelName name;
    double f1, f2, f3;
  } expected[] = {{ChannelName::CNOT, 1.0, 1.0, 1.0},
                  {ChannelName::DEPHASE, 0.5, 0.5, 0.5},
                  {ChannelName::L1, 1.0, 0.5, 0.5},
                  {ChannelName::L2, 0.5, 1.0, 0.5},
                  {ChannelName::L3, 0.5, 0.5, 1.0}};
  double worst = 0.0;
  for (const auto& row : expected) {
    const FidelityTriple f = evaluate_channel(channel(row.name).superop);
    worst = std::max({worst, std::abs(f.f1 - row.f1), std::abs(f.f2 - row.f2),
                      std::abs(f.f3 - row.f3)});
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "worst deviation %.3e", worst);
  detail = buf;
  return worst < 1e-12;
}

// 3. Gate-dephasing mixtures: fidelities and the p_E identification.
bool werner_round_trip(std::string& detail) {
  const FidelityTriple half = evaluate_channel(werner_mixture(0.5));
  bool ok = within(half.f1, 0.75, 1e-12) && within(half.f2, 0.75, 1e-12) &&
            within(half.f3, 0.75, 1e-12);
  const PeEstimate pe = p_e_estimate(half);
  ok = ok && pe.value.has_value() && within(*pe.value, 0.5, 1e-12);
  double worst = 0.0;
  for (int k = 0; k <= 10; ++k) {
    const double p = k / 10.0;
    const FidelityTriple f = evaluate_channel(werner_mixture(p));
    for (double fid : {f.f1, f.f2, f.f3})
      worst = std::max(worst, std::abs(2.0 * fid - 1.0 - p));
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf),
                "p_E(0.5) = %.12f, worst |2F-1-p| on grid %.3e",
                pe.value.value_or(-1.0), worst);
  detail = buf;
  return ok && worst < 1e-12;
}

// 4. The parallelism criterion is a strict threshold at a fidelity sum of 2.
bool criterion_threshold(std::string& detail) {
  const double third = 1.0 / 3.0;
  const FidelityTriple above = evaluate_channel(werner_mixture(third + 1e-6));
  const FidelityTriple below = evaluate_channel(werner_mixture(third - 1e-6));
  const FidelityTriple at = evaluate_channel(werner_mixture(third));
  char buf[96];
  std::snprintf(buf, sizeof(buf), "sum at p=1/3: %.15f (met=%d)", at.sum(),
                int(at.criterion_met()));
  detail = buf;
  return above.criterion_met() && !below.criterion_met() &&
         within(at.sum(), 2.0, 1e-12) && !at.criterion_met();
}

// 5. Correlation chain on random CPTP channels and random states.
bool correlation_chain(std::string& detail) {
  Rng rng(20260809);
  std::vector<SuperOperator> channels;
  channels.reserve(1000);
  for (int i = 0; i < 1000; ++i) channels.push_back(random_cptp_channel(rng));
  const std::vector<FidelityTriple> fidelities = evaluate_channels(channels);
  double worst_zz = 1.0, worst_xx = 1.0;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const CorrelationTriple c = output_correlations(channels[i]);
    worst_zz = std::min(worst_zz, c.zz - (2.0 * fidelities[i].f1 - 1.0));
    worst_xx = std::min(worst_xx, c.xx - (2.0 * fidelities[i].f2 - 1.0));
  }

  std::vector<DensityMatrix> states;
  states.reserve(1000);
  for (int i = 0; i < 1000; ++i) states.push_back(random_density_matrix(rng));
  const std::vector<double> concurrences = wootters_concurrences(states);
  double worst_state = 1.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const double bound =
        bound_from_correlations(state_correlations(states[i]));
    worst_state = std::min(worst_state, concurrences[i] - bound);
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "min margins: zz %.3e, xx %.3e, state bound %.3e", worst_zz,
                worst_xx, worst_state);
  detail = buf;
  return worst_zz >= -1e-9 && worst_xx >= -1e-9 && worst_state >= -1e-9;
}

// 6. In the gate-dephasing family the bound is tight for every input.
bool werner_tightness(std::string& detail) {
  double worst = 0.0;
  for (int k = 4; k <= 10; ++k) {
    const double p = k / 10.0;
    const SuperOperator s = werner_mixture(p);
    const double bound = bound_from_fidelities(evaluate_channel(s));
    const ConcurrenceReport report = concurrence_report(s);
    for (double oracle : report.oracle_per_input)
      worst = std::max(worst, std::abs(oracle - bound));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "worst |oracle - bound| %.3e", worst);
  detail = buf;
  return worst < 1e-9;
}

// 7. Statistical pipeline: simulate, evaluate, reproduce byte-for-byte.
bool statistical_pipeline(std::string& detail) {
  const fs::path dir = fs::temp_directory_path() / "cnotcert_acceptance";
  fs::create_directories(dir);
  const fs::path first = dir / "first.json";
  const fs::path second = dir / "second.json";
  const NoiseParams params{NoiseModel::Werner, 0.5};
  run_simulate(params, 100000, 20260809, first);
  run_simulate(params, 100000, 20260809, second);
  if (slurp(first).empty() || slurp(first) != slurp(second)) {
    detail = "reruns are not byte-identical";
    return false;
  }
  const Report report = run_evaluate(first, dir / "report.json");
  const FidelityTriple& f = report.fidelities;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "recovered F = (%.4f, %.4f, %.4f)", f.f1,
                f.f2, f.f3);
  detail = buf;
  return within(f.f1, 0.75, 0.01) && within(f.f2, 0.75, 0.01) &&
         within(f.f3, 0.75, 0.01);
}

// 8. Counts fixtures encoding the published gate fidelities.
bool fixture_fidelities(std::string& detail) {
  const fs::path dir = CNOTCERT_FIXTURE_DIR;
  const Report ska = run_evaluate(dir / "ska03.json", "");
  const Report bri = run_evaluate(dir / "bri03.json", "");
  char buf[96];
  std::snprintf(buf, sizeof(buf), "F1 = %.4f and %.4f", ska.fidelities.f1,
                bri.fidelities.f1);
  detail = buf;
  return within(ska.fidelities.f1, 0.735, 1e-3) &&
         within(bri.fidelities.f1, 0.84, 1e-3);
}

// 9. The measurement plan is 16 outcomes over 12 input settings.
bool plan_shape(std::string& detail) {
  const std::vector<PlanEntry> plan = measurement_plan();
  std::set<std::pair<std::string, int>> inputs;
  for (const PlanEntry& entry : plan)
    inputs.insert({entry.setting.describe(), entry.input});
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%zu outcomes over %zu inputs", plan.size(),
                inputs.size());
  detail = buf;
  return plan.size() == 16 && inputs.size() == 12;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"expansion identity", expansion_identity},
      {"canonical fidelity table", canonical_fidelities},
      {"gate-dephasing mixture round trip", werner_round_trip},
      {"parallelism criterion threshold", criterion_threshold},
      {"correlation and concurrence chain", correlation_chain},
      {"gate-dephasing family tightness", werner_tightness},
      {"statistical pipeline", statistical_pipeline},
      {"counts fixtures", fixture_fidelities},
      {"measurement plan shape", plan_shape},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %zu: %s (%s)\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), detail.c_str());
    if (!ok) ++failures;
  }
  if (failures > 0)
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else
    std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}

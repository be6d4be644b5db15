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

#include "cnotcert/fidelity.hpp"

#include <cmath>

namespace cnotcert {

namespace {

constexpr double kTpTol = 1e-9;

void require_setting(const ProbabilityTable& t, const BasisSetting& want,
                     const char* which) {
  if (!(t.setting == want))
    throw std::invalid_argument(std::string(which) + " requires the " +
                                want.describe() + " table, got " +
                                t.setting.describe());
}

}  // namespace

const char* label_text(int label) {
  static const char* kText[4] = {"00", "01", "10", "11"};
  if (label < 0 || label > 3)
    throw std::invalid_argument("label_text: label out of range");
  return kText[label];
}

int parse_label(const std::string& text) {
  for (int l = 0; l < 4; ++l)
    if (text == label_text(l)) return l;
  return -1;
}

std::string BasisSetting::describe() const {
  return std::string(pauli_name(out1)) + pauli_name(out2) + "|" +
         pauli_name(in1) + pauli_name(in2);
}

BasisSetting setting_zz() {
  return {Pauli::Z, Pauli::Z, Pauli::Z, Pauli::Z};
}

BasisSetting setting_xx() {
  return {Pauli::X, Pauli::X, Pauli::X, Pauli::X};
}

BasisSetting setting_xz_yy() {
  return {Pauli::X, Pauli::Z, Pauli::Y, Pauli::Y};
}

std::array<BasisSetting, 3> canonical_settings() {
  return {setting_zz(), setting_xx(), setting_xz_yy()};
}

ProbabilityTable truth_table(const SuperOperator& s,
                             const BasisSetting& setting) {
  if (!is_tp(s, kTpTol))
    throw std::invalid_argument(
        "truth_table: map is not trace-preserving, rows would not normalize");
  ProbabilityTable table{setting, Eigen::Matrix4d::Zero()};
  std::array<Mat4, 4> outcome_proj;
  for (int out = 0; out < 4; ++out) {
    const Vec4 v =
        tensor(eigenstate(setting.out1, bit_sign(label_bit1(out))),
               eigenstate(setting.out2, bit_sign(label_bit2(out))));
    outcome_proj[out] = projector(v);
  }
  for (int in = 0; in < 4; ++in) {
    const DensityMatrix rho =
        product_state(setting.in1, bit_sign(label_bit1(in)), setting.in2,
                      bit_sign(label_bit2(in)));
    const Mat4 out_state = s.apply(rho);
    for (int out = 0; out < 4; ++out)
      table.probs(in, out) = expectation(out_state, outcome_proj[out]);
  }
  return table;
}

double fidelity_f1(const ProbabilityTable& t) {
  require_setting(t, setting_zz(), "fidelity_f1");
  double acc = 0.0;
  for (int in = 0; in < 4; ++in) {
    const int a = label_bit1(in), b = label_bit2(in);
    acc += t.probs(in, label_of_bits(a, a ^ b));
  }
  return 0.25 * acc;
}

double fidelity_f2(const ProbabilityTable& t) {
  require_setting(t, setting_xx(), "fidelity_f2");
  double acc = 0.0;
  for (int in = 0; in < 4; ++in) {
    const int a = label_bit1(in), b = label_bit2(in);
    acc += t.probs(in, label_of_bits(a ^ b, b));
  }
  return 0.25 * acc;
}

double fidelity_f3(const ProbabilityTable& t) {
  require_setting(t, setting_xz_yy(), "fidelity_f3");
  // Accepted outcomes have <Y(x)Y> parity opposite to the <X(x)Z> parity of
  // the input, so the parity bits must differ.
  double acc = 0.0;
  for (int in = 0; in < 4; ++in)
    for (int out = 0; out < 4; ++out)
      if (label_parity(out) != label_parity(in)) acc += t.probs(in, out);
  return 0.25 * acc;
}

FidelityTriple evaluate_channel(const SuperOperator& s) {
  return {fidelity_f1(truth_table(s, setting_zz())),
          fidelity_f2(truth_table(s, setting_xx())),
          fidelity_f3(truth_table(s, setting_xz_yy()))};
}

PeEstimate p_e_estimate(const FidelityTriple& f, double equality_tol) {
  const double lo = std::min({f.f1, f.f2, f.f3});
  const double hi = std::max({f.f1, f.f2, f.f3});
  if (hi - lo > equality_tol) {
    return {std::nullopt,
            "fidelities spread " + std::to_string(hi - lo) +
                " exceeds equality tolerance " + std::to_string(equality_tol) +
                "; the one-parameter mixture model does not apply"};
  }
  return {2.0 * (f.sum() / 3.0) - 1.0, ""};
}

std::vector<PlanEntry> measurement_plan() {
  std::vector<PlanEntry> plan;
  plan.reserve(16);
  for (int in = 0; in < 4; ++in) {
    const int a = label_bit1(in), b = label_bit2(in);
    plan.push_back({setting_zz(), in, label_of_bits(a, a ^ b)});
  }
  for (int in = 0; in < 4; ++in) {
    const int a = label_bit1(in), b = label_bit2(in);
    plan.push_back({setting_xx(), in, label_of_bits(a ^ b, b)});
  }
  for (int in = 0; in < 4; ++in)
    for (int out = 0; out < 4; ++out)
      if (label_parity(out) != label_parity(in))
        plan.push_back({setting_xz_yy(), in, out});
  return plan;
}

}  // namespace cnotcert

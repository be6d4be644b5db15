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

#ifndef CNOTCERT_FIDELITY_HPP_
#define CNOTCERT_FIDELITY_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cnotcert/algebra.hpp"

// Truth tables for eigenbasis input/output settings, the three classical
// fidelities F1/F2/F3, the quantum-parallelism criterion, and the minimal
// measurement plan.
//
// Logical labels are two bits "ab" with qubit one first; bit 0 encodes
// eigenvalue +1 and bit 1 encodes eigenvalue -1 in the row or column basis.
// With that encoding the ZZ table of the ideal gate coincides with the
// conventional computational-basis truth table.

namespace cnotcert {

constexpr int bit_sign(int bit) { return bit == 0 ? +1 : -1; }
constexpr int label_of_bits(int a, int b) { return 2 * a + b; }
constexpr int label_bit1(int label) { return (label >> 1) & 1; }
constexpr int label_bit2(int label) { return label & 1; }
/// Eigenvalue-product parity: 0 for +1, 1 for -1.
constexpr int label_parity(int label) { return label_bit1(label) ^ label_bit2(label); }

const char* label_text(int label);
/// Parses "00".."11"; returns -1 on anything else.
int parse_label(const std::string& text);

/// Input and output product bases of one measurement setting.
struct BasisSetting {
  Pauli in1, in2, out1, out2;

  bool operator==(const BasisSetting&) const = default;

  std::string describe() const;  // e.g. "ZZ|ZZ" (output|input)
};

/// The three canonical settings: ZZ->ZZ, XX->XX, XZ->YY.
BasisSetting setting_zz();
BasisSetting setting_xx();
BasisSetting setting_xz_yy();
std::array<BasisSetting, 3> canonical_settings();

/// Conditional outcome probabilities: row = input label, col = outcome label.
struct ProbabilityTable {
  BasisSetting setting;
  Eigen::Matrix4d probs;
};

/// probs(in, out) = < projector(out), S(product_state(in)) > for the given
/// setting. Requires S trace-preserving within 1e-9 so that rows normalize.
ProbabilityTable truth_table(const SuperOperator& s,
                             const BasisSetting& setting);

/// F1: computational-basis controlled-NOT fidelity (ZZ inputs, ZZ outputs).
double fidelity_f1(const ProbabilityTable& t);
/// F2: the X-basis controlled-NOT with control and target exchanged.
double fidelity_f2(const ProbabilityTable& t);
/// F3: XZ inputs, YY outputs; an outcome is accepted when its eigenvalue
/// parity is opposite to the input parity, two accepted outcomes per input.
double fidelity_f3(const ProbabilityTable& t);

/// Sums within this band of the threshold 2 count as exactly at threshold
/// and do not certify parallelism; this pins the behaviour of the strict
/// inequality at floating-point resolution.
inline constexpr double kCriterionBand = 1e-12;

struct FidelityTriple {
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;

  double sum() const { return f1 + f2 + f3; }
  /// Number of parallel local operations, 2(F1+F2+F3) - 3.
  double parallelism_number() const { return 2.0 * sum() - 3.0; }
  /// Quantum parallelism requires F1+F2+F3 > 2 (strict).
  bool criterion_met() const { return sum() > 2.0 + kCriterionBand; }
  /// Lower bound on the concurrence of the generated output states.
  double concurrence_bound() const { return sum() - 2.0; }
};

/// The three canonical truth tables evaluated and reduced to (F1,F2,F3).
FidelityTriple evaluate_channel(const SuperOperator& s);

struct PeEstimate {
  std::optional<double> value;
  std::string reason;  // set when value is absent
};

/// 2*mean(F)-1 when the three fidelities agree within equality_tol;
/// otherwise absent (the one-parameter dephasing mixture does not apply).
PeEstimate p_e_estimate(const FidelityTriple& f, double equality_tol = 0.01);

struct PlanEntry {
  BasisSetting setting;
  int input;    // label 0..3
  int outcome;  // label 0..3
};

/// The 16 (setting, input, outcome) probabilities that determine F1, F2 and
/// F3: four each for F1 and F2, eight for F3, over 12 distinct inputs.
std::vector<PlanEntry> measurement_plan();

}  // namespace cnotcert

#endif  // CNOTCERT_FIDELITY_HPP_

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

#ifndef CNOTCERT_CHANNELS_HPP_
#define CNOTCERT_CHANNELS_HPP_

#include <string>

#include "cnotcert/algebra.hpp"

// The named channels of the controlled-NOT decomposition and the gate
// models built from them.
//
//   CNOT     rho -> U rho U^dag with U = (II + IX + ZI - ZX)/2
//   DEPHASE  uniform dephasing between Z eigenstates of qubit one and X
//            eigenstates of qubit two (the incoherent mixture of the four
//            operator products above)
//   L1       measure Z on qubit one, flip qubit two (X) on outcome -1;
//            a classical controlled-NOT in the computational basis
//   L2       measure X on qubit two, flip qubit one (Z) on outcome -1;
//            the same logic with the qubit roles and X/Z exchanged
//   L3       even mixture of the correlated rotations
//            exp(+-i pi/4 Z) (x) exp(+-i pi/4 X)
//
// The ideal gate decomposes exactly as CNOT = L1 + L2 + L3 - 2 DEPHASE,
// and a dephasing-noise gate with truth-table fidelities (F1,F2,F3) as
// (2F1-1) L1 + (2F2-1) L2 + (2F3-1) L3 + 2(2-F1-F2-F3) DEPHASE.

namespace cnotcert {

enum class ChannelName { CNOT, DEPHASE, L1, L2, L3 };

const char* channel_name(ChannelName name);

struct NamedChannel {
  ChannelName name;
  SuperOperator superop;
  WeightedKrausSpec spec;
};

/// (II + IX + ZI - ZX)/2; the permutation swapping |10> and |11>.
Mat4 cnot_unitary();

/// Build one of the five named channels; all are CPTP.
NamedChannel channel(ChannelName name);

/// Max-entry difference between the transfer matrices of CNOT and of
/// L1 + L2 + L3 - 2 DEPHASE. Zero up to rounding; the caller decides what
/// tolerance counts as a pass.
double expansion_residual();

/// Weights on (L1, L2, L3, DEPHASE). Trace preservation of the combination
/// is equivalent to l1 + l2 + l3 + dephase == 1.
struct ExpansionCoefficients {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
  double dephase = 0.0;

  double sum() const { return l1 + l2 + l3 + dephase; }

  /// (1, 1, 1, -2): the ideal gate.
  static ExpansionCoefficients ideal();
  /// (2F1-1, 2F2-1, 2F3-1, 2(2-F1-F2-F3)): the dephasing-noise estimate.
  static ExpansionCoefficients from_fidelities(double f1, double f2,
                                               double f3);
};

/// The dephasing-noise reconstruction for the given truth-table fidelities.
/// Always trace-preserving; complete positivity is not guaranteed and should
/// be queried with is_cp. Fidelities outside [0,1] are rejected.
SuperOperator reconstruct_from_fidelities(double f1, double f2, double f3);

/// p_e * CNOT + (1 - p_e) * DEPHASE; CPTP for p_e in [0,1].
SuperOperator werner_mixture(double p_e);

}  // namespace cnotcert

#endif  // CNOTCERT_CHANNELS_HPP_

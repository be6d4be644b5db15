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

#ifndef CNOTCERT_ENTANGLEMENT_HPP_
#define CNOTCERT_ENTANGLEMENT_HPP_

#include <array>

#include "cnotcert/algebra.hpp"
#include "cnotcert/fidelity.hpp"

// Output correlations under X(x)Z product inputs, concurrence lower bounds
// derived from them, and an exact Wootters concurrence oracle used to
// cross-validate the bounds.

namespace cnotcert {

/// Average magnitudes of <Z(x)Z>, <X(x)X>, <Y(x)Y>. For channels the average
/// runs over the four X(x)Z product inputs (mean of absolute per-input
/// expectations, not the absolute mean).
struct CorrelationTriple {
  double zz = 0.0;
  double xx = 0.0;
  double yy = 0.0;
};

/// Apply the channel to the four inputs |X=s1> (x) |Z=s2> and average the
/// absolute output correlations. Requires a trace-preserving map.
CorrelationTriple output_correlations(const SuperOperator& s);

/// Absolute correlations of a single state.
CorrelationTriple state_correlations(const DensityMatrix& rho);

/// (|<XX>| + |<YY>| + |<ZZ>| - 1) / 2; valid concurrence lower bound for any
/// two-qubit state, negative when nothing is certified.
double bound_from_correlations(const CorrelationTriple& c);

/// F1 + F2 + F3 - 2; implied by the correlation bound, so always the weaker
/// of the two on the same channel.
double bound_from_fidelities(const FidelityTriple& f);

/// Exact concurrence: max(0, l1-l2-l3-l4) with l_i the decreasing square
/// roots of the eigenvalues of rho (YY) conj(rho) (YY). Eigenvalues in
/// [-1e-10, 0) from rounding are clamped to zero before the square root.
double wootters_concurrence(const DensityMatrix& rho);

struct ConcurrenceReport {
  double bound_from_correlations = 0.0;
  double bound_from_fidelities = 0.0;
  /// Exact concurrence of each X(x)Z-input output, inputs in label order.
  std::array<double, 4> oracle_per_input{};
};

/// Both bounds plus the oracle values. Refuses maps that are not CPTP: the
/// oracle is undefined on non-physical outputs, and projecting them back to
/// physical states would fabricate entanglement numbers.
ConcurrenceReport concurrence_report(const SuperOperator& s);

}  // namespace cnotcert

#endif  // CNOTCERT_ENTANGLEMENT_HPP_

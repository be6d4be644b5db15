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

#include "cnotcert/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace cnotcert {

namespace {

const Mat4& correlation_op(Pauli p) {
  static const Mat4 zz = tensor(pauli_matrix(Pauli::Z), pauli_matrix(Pauli::Z));
  static const Mat4 xx = tensor(pauli_matrix(Pauli::X), pauli_matrix(Pauli::X));
  static const Mat4 yy = tensor(pauli_matrix(Pauli::Y), pauli_matrix(Pauli::Y));
  switch (p) {
    case Pauli::X: return xx;
    case Pauli::Y: return yy;
    default: return zz;
  }
}

CorrelationTriple abs_correlations(const Mat4& state) {
  return {std::abs(expectation(state, correlation_op(Pauli::Z))),
          std::abs(expectation(state, correlation_op(Pauli::X))),
          std::abs(expectation(state, correlation_op(Pauli::Y)))};
}

}  // namespace

CorrelationTriple output_correlations(const SuperOperator& s) {
  if (!is_tp(s, 1e-9))
    throw std::invalid_argument(
        "output_correlations: map is not trace-preserving");
  CorrelationTriple acc;
  for (int in = 0; in < 4; ++in) {
    const DensityMatrix rho =
        product_state(Pauli::X, bit_sign(label_bit1(in)), Pauli::Z,
                      bit_sign(label_bit2(in)));
    const CorrelationTriple c = abs_correlations(s.apply(rho));
    acc.zz += c.zz;
    acc.xx += c.xx;
    acc.yy += c.yy;
  }
  return {0.25 * acc.zz, 0.25 * acc.xx, 0.25 * acc.yy};
}

CorrelationTriple state_correlations(const DensityMatrix& rho) {
  return abs_correlations(rho.matrix());
}

double bound_from_correlations(const CorrelationTriple& c) {
  return 0.5 * (c.xx + c.yy + c.zz - 1.0);
}

double bound_from_fidelities(const FidelityTriple& f) {
  return f.sum() - 2.0;
}

double wootters_concurrence(const DensityMatrix& rho) {
  const Mat4& yy = correlation_op(Pauli::Y);
  const Mat4 tilde = yy * rho.matrix().conjugate() * yy;
  Eigen::ComplexEigenSolver<Mat4> es(rho.matrix() * tilde, false);
  std::array<double, 4> roots{};
  for (int k = 0; k < 4; ++k) {
    // The product is similar to a PSD matrix; its eigenvalues are real and
    // nonnegative up to rounding near rank deficiency.
    const double ev = es.eigenvalues()(k).real();
    roots[k] = std::sqrt(std::max(0.0, ev));
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

ConcurrenceReport concurrence_report(const SuperOperator& s) {
  if (!is_tp(s, 1e-9))
    throw std::invalid_argument(
        "concurrence_report: map is not trace-preserving");
  if (!is_cp(s, kPhysicalityTol))
    throw std::invalid_argument(
        "concurrence_report: map is not completely positive; the concurrence "
        "oracle is undefined on non-physical outputs");
  ConcurrenceReport report;
  report.bound_from_correlations =
      bound_from_correlations(output_correlations(s));
  report.bound_from_fidelities = bound_from_fidelities(evaluate_channel(s));
  for (int in = 0; in < 4; ++in) {
    const DensityMatrix rho =
        product_state(Pauli::X, bit_sign(label_bit1(in)), Pauli::Z,
                      bit_sign(label_bit2(in)));
    report.oracle_per_input[in] =
        wootters_concurrence(DensityMatrix(s.apply(rho)));
  }
  return report;
}

}  // namespace cnotcert

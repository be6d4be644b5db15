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

#include "cnotcert/channels.hpp"

#include <cmath>

namespace cnotcert {

namespace {

Mat2 pauli_exp(Pauli axis, double angle) {
  // exp(i * angle * P) = cos(angle) I + i sin(angle) P for P^2 = I.
  return std::cos(angle) * pauli_matrix(Pauli::I) +
         Complex(0, std::sin(angle)) * pauli_matrix(axis);
}

WeightedKrausSpec cnot_spec() {
  return {{{1.0, {cnot_unitary()}}}};
}

WeightedKrausSpec dephase_spec() {
  const Mat2 i = pauli_matrix(Pauli::I);
  const Mat2 x = pauli_matrix(Pauli::X);
  const Mat2 z = pauli_matrix(Pauli::Z);
  return {{{0.25, {tensor(i, i), tensor(i, x), tensor(z, i), tensor(z, x)}}}};
}

WeightedKrausSpec l1_spec() {
  // Project qubit one onto a Z eigenstate; flip qubit two when it is -1.
  const Mat4 keep =
      tensor(projector(eigenstate(Pauli::Z, +1)), pauli_matrix(Pauli::I));
  const Mat4 flip =
      tensor(projector(eigenstate(Pauli::Z, -1)), pauli_matrix(Pauli::X));
  return {{{1.0, {keep, flip}}}};
}

WeightedKrausSpec l2_spec() {
  // Project qubit two onto an X eigenstate; flip qubit one (Z) when it is -1.
  const Mat4 keep =
      tensor(pauli_matrix(Pauli::I), projector(eigenstate(Pauli::X, +1)));
  const Mat4 flip =
      tensor(pauli_matrix(Pauli::Z), projector(eigenstate(Pauli::X, -1)));
  return {{{1.0, {keep, flip}}}};
}

WeightedKrausSpec l3_spec() {
  const double quarter_pi = std::acos(-1.0) / 4.0;
  const Mat4 plus =
      tensor(pauli_exp(Pauli::Z, quarter_pi), pauli_exp(Pauli::X, quarter_pi));
  const Mat4 minus = tensor(pauli_exp(Pauli::Z, -quarter_pi),
                            pauli_exp(Pauli::X, -quarter_pi));
  return {{{0.5, {plus}}, {0.5, {minus}}}};
}

}  // namespace

const char* channel_name(ChannelName name) {
  switch (name) {
    case ChannelName::CNOT: return "CNOT";
    case ChannelName::DEPHASE: return "DEPHASE";
    case ChannelName::L1: return "L1";
    case ChannelName::L2: return "L2";
    case ChannelName::L3: return "L3";
  }
  return "?";
}

Mat4 cnot_unitary() {
  const Mat2 i = pauli_matrix(Pauli::I);
  const Mat2 x = pauli_matrix(Pauli::X);
  const Mat2 z = pauli_matrix(Pauli::Z);
  return 0.5 * (tensor(i, i) + tensor(i, x) + tensor(z, i) - tensor(z, x));
}

NamedChannel channel(ChannelName name) {
  WeightedKrausSpec spec;
  switch (name) {
    case ChannelName::CNOT: spec = cnot_spec(); break;
    case ChannelName::DEPHASE: spec = dephase_spec(); break;
    case ChannelName::L1: spec = l1_spec(); break;
    case ChannelName::L2: spec = l2_spec(); break;
    case ChannelName::L3: spec = l3_spec(); break;
    default:
      throw std::invalid_argument("channel: unknown name");
  }
  return {name, superop_from_spec(spec), spec};
}

double expansion_residual() {
  const Mat16 lhs = channel(ChannelName::CNOT).superop.matrix();
  const Mat16 rhs = channel(ChannelName::L1).superop.matrix() +
                    channel(ChannelName::L2).superop.matrix() +
                    channel(ChannelName::L3).superop.matrix() -
                    2.0 * channel(ChannelName::DEPHASE).superop.matrix();
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

ExpansionCoefficients ExpansionCoefficients::ideal() {
  return {1.0, 1.0, 1.0, -2.0};
}

ExpansionCoefficients ExpansionCoefficients::from_fidelities(double f1,
                                                             double f2,
                                                             double f3) {
  return {2.0 * f1 - 1.0, 2.0 * f2 - 1.0, 2.0 * f3 - 1.0,
          2.0 * (2.0 - f1 - f2 - f3)};
}

SuperOperator reconstruct_from_fidelities(double f1, double f2, double f3) {
  for (double f : {f1, f2, f3})
    if (!(f >= 0.0 && f <= 1.0))
      throw std::invalid_argument(
          "reconstruct_from_fidelities: fidelities must lie in [0,1]");
  const ExpansionCoefficients c = ExpansionCoefficients::from_fidelities(
      f1, f2, f3);
  return c.l1 * channel(ChannelName::L1).superop +
         c.l2 * channel(ChannelName::L2).superop +
         c.l3 * channel(ChannelName::L3).superop +
         c.dephase * channel(ChannelName::DEPHASE).superop;
}

SuperOperator werner_mixture(double p_e) {
  if (!(p_e >= 0.0 && p_e <= 1.0))
    throw std::invalid_argument("werner_mixture: p_e must lie in [0,1]");
  return p_e * channel(ChannelName::CNOT).superop +
         (1.0 - p_e) * channel(ChannelName::DEPHASE).superop;
}

}  // namespace cnotcert

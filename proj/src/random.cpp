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

#include "cnotcert/random.hpp"

#include <cmath>

namespace cnotcert {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace

DensityMatrix random_density_matrix(Rng& rng) {
  Mat4 g;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = gaussian(rng);
  Mat4 rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

SuperOperator random_cptp_channel(Rng& rng) {
  Eigen::Matrix<Complex, 16, 4> g;
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = gaussian(rng);
  Eigen::HouseholderQR<Eigen::Matrix<Complex, 16, 4>> qr(g);
  Eigen::Matrix<Complex, 16, 4> isometry =
      qr.householderQ() * Eigen::Matrix<Complex, 16, 4>::Identity();
  // Fix the R-diagonal phases so the isometry is Haar distributed.
  for (int k = 0; k < 4; ++k) {
    const Complex d = qr.matrixQR()(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) isometry.col(k) *= d / mag;
  }
  WeightedKrausTerm term;
  term.weight = 1.0;
  for (int e = 0; e < 4; ++e)
    term.kraus.push_back(isometry.block<4, 4>(4 * e, 0));
  return superop_from_spec({{term}});
}

}  // namespace cnotcert

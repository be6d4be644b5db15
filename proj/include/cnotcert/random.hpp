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

#ifndef CNOTCERT_RANDOM_HPP_
#define CNOTCERT_RANDOM_HPP_

#include <random>

#include "cnotcert/algebra.hpp"

// Random states and channels for property sweeps and benchmarks.

namespace cnotcert {

using Rng = std::mt19937_64;

/// G G^dagger normalized to unit trace, G a 4x4 matrix of independent
/// standard complex Gaussians; full rank with probability one.
DensityMatrix random_density_matrix(Rng& rng);

/// Stinespring construction from a Haar-random isometry C^4 -> C^4 (x) C^4
/// (environment dimension 4): the four Kraus operators are the blocks of the
/// isometry, so the result is CPTP by construction.
SuperOperator random_cptp_channel(Rng& rng);

}  // namespace cnotcert

#endif  // CNOTCERT_RANDOM_HPP_

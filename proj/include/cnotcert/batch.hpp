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

#ifndef CNOTCERT_BATCH_HPP_
#define CNOTCERT_BATCH_HPP_

#include <span>
#include <vector>

#include "cnotcert/entanglement.hpp"
#include "cnotcert/fidelity.hpp"

// Batch sweep kernels for large property runs. The elements are independent
// pure-function evaluations, so the OpenMP versions return bit-identical
// results to their serial *_reference twins, which are kept for testing and
// for the benchmark tool.

namespace cnotcert {

std::vector<FidelityTriple> evaluate_channels(
    std::span<const SuperOperator> channels);
std::vector<FidelityTriple> evaluate_channels_reference(
    std::span<const SuperOperator> channels);

std::vector<double> wootters_concurrences(
    std::span<const DensityMatrix> states);
std::vector<double> wootters_concurrences_reference(
    std::span<const DensityMatrix> states);

}  // namespace cnotcert

#endif  // CNOTCERT_BATCH_HPP_

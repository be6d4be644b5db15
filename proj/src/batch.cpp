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

#include "cnotcert/batch.hpp"

namespace cnotcert {

std::vector<FidelityTriple> evaluate_channels(
    std::span<const SuperOperator> channels) {
  std::vector<FidelityTriple> out(channels.size());
  const std::int64_t n = static_cast<std::int64_t>(channels.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        evaluate_channel(channels[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<FidelityTriple> evaluate_channels_reference(
    std::span<const SuperOperator> channels) {
  std::vector<FidelityTriple> out;
  out.reserve(channels.size());
  for (const SuperOperator& s : channels) out.push_back(evaluate_channel(s));
  return out;
}

std::vector<double> wootters_concurrences(
    std::span<const DensityMatrix> states) {
  std::vector<double> out(states.size());
  const std::int64_t n = static_cast<std::int64_t>(states.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        wootters_concurrence(states[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<double> wootters_concurrences_reference(
    std::span<const DensityMatrix> states) {
  std::vector<double> out;
  out.reserve(states.size());
  for (const DensityMatrix& rho : states)
    out.push_back(wootters_concurrence(rho));
  return out;
}

}  // namespace cnotcert

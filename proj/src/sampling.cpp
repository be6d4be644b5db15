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

#include "cnotcert/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace cnotcert {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

// Cumulative row probabilities, negatives clamped to zero. Rejects rows that
// are negative beyond rounding (the map is not completely positive).
std::array<double, 4> row_cdf(const Eigen::Matrix4d& probs, int input) {
  std::array<double, 4> cdf{};
  double acc = 0.0;
  for (int out = 0; out < 4; ++out) {
    const double p = probs(input, out);
    if (p < -1e-9)
      throw std::invalid_argument(
          "sample_counts: negative outcome probability; the channel is not "
          "completely positive");
    acc += std::max(0.0, p);
    cdf[out] = acc;
  }
  return cdf;
}

int pick_outcome(const std::array<double, 4>& cdf, double u) {
  for (int out = 0; out < 4; ++out)
    if (cdf[out] > u) return out;
  return 3;
}

}  // namespace

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
  return mix(seed + (index + 1) * kSplitMix64Gamma);
}

double uniform53(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::next() {
  state += kSplitMix64Gamma;
  return mix(state);
}

const char* noise_model_name(NoiseModel m) {
  switch (m) {
    case NoiseModel::Werner: return "werner";
    case NoiseModel::ZxDephase: return "zx_dephase";
    case NoiseModel::Depolarize: return "depolarize";
    case NoiseModel::LocalFlip: return "local_flip";
  }
  return "?";
}

NoiseModel parse_noise_model(const std::string& text) {
  for (NoiseModel m : {NoiseModel::Werner, NoiseModel::ZxDephase,
                       NoiseModel::Depolarize, NoiseModel::LocalFlip})
    if (text == noise_model_name(m)) return m;
  throw std::invalid_argument("unknown noise model \"" + text + "\"");
}

SuperOperator build_noisy_channel(const NoiseParams& params) {
  const double s = params.strength;
  if (!(s >= 0.0 && s <= 1.0))
    throw std::invalid_argument(
        "build_noisy_channel: strength must lie in [0,1]");
  const SuperOperator gate = channel(ChannelName::CNOT).superop;
  switch (params.model) {
    case NoiseModel::Werner:
      return werner_mixture(s);
    case NoiseModel::ZxDephase: {
      const SuperOperator after = (1.0 - s) * SuperOperator::identity() +
                                  s * channel(ChannelName::DEPHASE).superop;
      return after * gate;
    }
    case NoiseModel::Depolarize: {
      // rho -> trace(rho) * I/4 as a transfer matrix: vec(I/4) times the
      // trace functional.
      Mat4 quarter = 0.25 * Mat4::Identity();
      Mat4 identity = Mat4::Identity();
      const Eigen::Map<const Vec16> target(quarter.data());
      const Eigen::Map<const Vec16> trace_row(identity.data());
      const SuperOperator to_mixed(
          Mat16(target * trace_row.transpose()));
      return (1.0 - s) * gate + s * to_mixed;
    }
    case NoiseModel::LocalFlip: {
      const Mat4 x1 = tensor(pauli_matrix(Pauli::X), pauli_matrix(Pauli::I));
      const Mat4 x2 = tensor(pauli_matrix(Pauli::I), pauli_matrix(Pauli::X));
      const SuperOperator flip1 = (1.0 - s) * SuperOperator::identity() +
                                  s * SuperOperator::conjugation(x1);
      const SuperOperator flip2 = (1.0 - s) * SuperOperator::identity() +
                                  s * SuperOperator::conjugation(x2);
      return flip2 * flip1 * gate;
    }
  }
  throw std::invalid_argument("build_noisy_channel: unknown model");
}

std::vector<CountsRecord> sample_counts(const SuperOperator& s,
                                        const BasisSetting& setting,
                                        std::uint64_t shots_per_input,
                                        std::uint64_t seed) {
  if (shots_per_input < 1)
    throw std::invalid_argument("sample_counts: shots_per_input must be >= 1");
  const ProbabilityTable table = truth_table(s, setting);
  std::vector<CountsRecord> records;
  records.reserve(4);
  for (int input = 0; input < 4; ++input) {
    const std::array<double, 4> cdf = row_cdf(table.probs, input);
    const std::uint64_t offset =
        static_cast<std::uint64_t>(input) * shots_per_input;
    std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    const std::int64_t n = static_cast<std::int64_t>(shots_per_input);
#pragma omp parallel for schedule(static) reduction(+ : c0, c1, c2, c3)
    for (std::int64_t shot = 0; shot < n; ++shot) {
      const double u = uniform53(
          splitmix64_at(seed, offset + static_cast<std::uint64_t>(shot)));
      switch (pick_outcome(cdf, u)) {
        case 0: ++c0; break;
        case 1: ++c1; break;
        case 2: ++c2; break;
        default: ++c3; break;
      }
    }
    records.push_back({setting, input, {c0, c1, c2, c3}});
  }
  return records;
}

std::vector<CountsRecord> sample_counts_reference(
    const SuperOperator& s, const BasisSetting& setting,
    std::uint64_t shots_per_input, std::uint64_t seed) {
  if (shots_per_input < 1)
    throw std::invalid_argument("sample_counts: shots_per_input must be >= 1");
  const ProbabilityTable table = truth_table(s, setting);
  SplitMix64 stream(seed);
  std::vector<CountsRecord> records;
  records.reserve(4);
  for (int input = 0; input < 4; ++input) {
    const std::array<double, 4> cdf = row_cdf(table.probs, input);
    CountsRecord record{setting, input, {}};
    for (std::uint64_t shot = 0; shot < shots_per_input; ++shot)
      ++record.counts[pick_outcome(cdf, uniform53(stream.next()))];
    records.push_back(record);
  }
  return records;
}

std::vector<CountsRecord> sample_canonical(const SuperOperator& s,
                                           std::uint64_t shots_per_input,
                                           std::uint64_t seed) {
  const std::array<BasisSetting, 3> settings = canonical_settings();
  std::vector<CountsRecord> all;
  all.reserve(12);
  for (std::size_t k = 0; k < settings.size(); ++k) {
    const std::vector<CountsRecord> part =
        sample_counts(s, settings[k], shots_per_input, seed ^ kSettingSalt[k]);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

ProbabilityTable counts_to_table(std::span<const CountsRecord> records) {
  if (records.size() != 4)
    throw std::invalid_argument(
        "counts_to_table: need exactly one record per input, got " +
        std::to_string(records.size()));
  ProbabilityTable table{records[0].setting, Eigen::Matrix4d::Zero()};
  std::array<bool, 4> seen{};
  for (const CountsRecord& record : records) {
    if (!(record.setting == table.setting))
      throw std::invalid_argument(
          "counts_to_table: records mix different settings");
    if (record.input < 0 || record.input > 3)
      throw std::invalid_argument("counts_to_table: input label out of range");
    if (seen[record.input])
      throw std::invalid_argument(
          std::string("counts_to_table: duplicate record for input ") +
          label_text(record.input));
    seen[record.input] = true;
    const std::uint64_t shots = record.shots();
    if (shots == 0)
      throw std::invalid_argument(
          std::string("counts_to_table: zero shots for input ") +
          label_text(record.input));
    for (int out = 0; out < 4; ++out)
      table.probs(record.input, out) =
          static_cast<double>(record.counts[out]) / static_cast<double>(shots);
  }
  for (int input = 0; input < 4; ++input)
    if (!seen[input])
      throw std::invalid_argument(
          std::string("counts_to_table: missing record for input ") +
          label_text(input));
  return table;
}

}  // namespace cnotcert

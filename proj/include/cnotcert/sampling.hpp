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

#ifndef CNOTCERT_SAMPLING_HPP_
#define CNOTCERT_SAMPLING_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cnotcert/algebra.hpp"
#include "cnotcert/channels.hpp"
#include "cnotcert/fidelity.hpp"

// Finite-shot experiment simulation: parameterized noise channels, seeded
// multinomial outcome sampling, and counts <-> probability-table conversion.
//
// Reproducibility contract (fixed across versions and implementations):
//   * the generator is SplitMix64: output(seed, i) applies the standard
//     finalizer (xor-shift 30 / mul 0xBF58476D1CE4E5B9 / xor-shift 27 /
//     mul 0x94D049BB133111EB / xor-shift 31) to
//     seed + (i+1) * 0x9E3779B97F4A7C15, so the i-th word of a stream is a
//     pure function of (seed, i) and shots may be drawn in any order;
//   * one call to sample_counts consumes one stream: shot s of input j uses
//     word index j * shots_per_input + s, inputs in order 00,01,10,11;
//   * each word maps to u = (word >> 11) * 2^-53 in [0,1); the outcome is
//     the first label (left to right over 00,01,10,11) whose cumulative row
//     probability, accumulated left to right in double precision, exceeds u,
//     falling back to 11 if rounding leaves no such label;
//   * the three canonical settings draw from independent sub-seeds
//     seed XOR kSettingSalt[k], settings in order ZZ, XX, XZ->YY.

namespace cnotcert {

inline constexpr std::uint64_t kSplitMix64Gamma = 0x9E3779B97F4A7C15ull;

/// The i-th output of the SplitMix64 stream starting at seed.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0,1) from the top 53 bits of a word.
double uniform53(std::uint64_t word);

/// Sequential form of the same stream; next() after construction with seed
/// returns splitmix64_at(seed, 0), splitmix64_at(seed, 1), ...
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
};

/// Per-setting sub-seed salts for the canonical ZZ, XX, XZ->YY settings.
inline constexpr std::array<std::uint64_t, 3> kSettingSalt = {
    0x243F6A8885A308D3ull, 0x13198A2E03707344ull, 0xA4093822299F31D0ull};

enum class NoiseModel { Werner, ZxDephase, Depolarize, LocalFlip };

const char* noise_model_name(NoiseModel m);
/// Accepts "werner", "zx_dephase", "depolarize", "local_flip".
NoiseModel parse_noise_model(const std::string& text);

struct NoiseParams {
  NoiseModel model = NoiseModel::Werner;
  double strength = 0.0;  // in [0,1]
};

/// CPTP channel for the given model:
///   werner      strength * CNOT + (1-strength) * DEPHASE
///   zx_dephase  ((1-s) * identity + s * DEPHASE) after the ideal gate
///   depolarize  output mixed with I/4 at weight s after the ideal gate
///   local_flip  independent X error with probability s on each qubit after
///               the ideal gate
SuperOperator build_noisy_channel(const NoiseParams& params);

/// Raw shot counts for one (setting, input) pair.
struct CountsRecord {
  BasisSetting setting;
  int input = 0;  // label 0..3
  std::array<std::uint64_t, 4> counts{};

  std::uint64_t shots() const {
    return counts[0] + counts[1] + counts[2] + counts[3];
  }
};

/// Multinomial samples of the truth-table rows, one record per input, drawn
/// per the reproducibility contract above. The inner per-shot loop runs
/// under OpenMP when available; counts are integer reductions, so the result
/// is identical to the serial reference. Rejects maps with negative outcome
/// probabilities (non-CP) and non-trace-preserving maps.
std::vector<CountsRecord> sample_counts(const SuperOperator& s,
                                        const BasisSetting& setting,
                                        std::uint64_t shots_per_input,
                                        std::uint64_t seed);

/// Serial reference sampler: consumes the SplitMix64 stream one state
/// advance per shot. Kept for testing the parallel kernel against.
std::vector<CountsRecord> sample_counts_reference(const SuperOperator& s,
                                                  const BasisSetting& setting,
                                                  std::uint64_t shots_per_input,
                                                  std::uint64_t seed);

/// All three canonical settings with salted sub-seeds, 12 records in
/// setting-major, input-minor order.
std::vector<CountsRecord> sample_canonical(const SuperOperator& s,
                                           std::uint64_t shots_per_input,
                                           std::uint64_t seed);

/// Normalizes each record's counts by its own shot total. Requires exactly
/// the four inputs of one setting, each with at least one shot.
ProbabilityTable counts_to_table(std::span<const CountsRecord> records);

}  // namespace cnotcert

#endif  // CNOTCERT_SAMPLING_HPP_

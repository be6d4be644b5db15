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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cnotcert/sampling.hpp"
#include "test_util.hpp"

using namespace cnotcert;
using testutil::max_abs_diff;

TEST_CASE("splitmix64 generator contract") {
  // reference output of the standard SplitMix64 for seed 0
  CHECK(splitmix64_at(0, 0) == 0xE220A8397B1DCDAFull);

  // the indexed form equals the sequential stream
  SplitMix64 stream(12345);
  for (std::uint64_t i = 0; i < 100; ++i)
    CHECK(stream.next() == splitmix64_at(12345, i));

  for (std::uint64_t i = 0; i < 1000; ++i) {
    const double u = uniform53(splitmix64_at(99, i));
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("noise models") {
  CHECK(max_abs_diff(
            build_noisy_channel({NoiseModel::Werner, 1.0}).matrix(),
            channel(ChannelName::CNOT).superop.matrix()) == 0.0);
  CHECK(max_abs_diff(
            build_noisy_channel({NoiseModel::Werner, 0.0}).matrix(),
            channel(ChannelName::DEPHASE).superop.matrix()) == 0.0);

  // dephasing after the gate equals mixing the gate with DEPHASE, because
  // the dephasing Kraus operators commute with the gate unitary
  for (double s : {0.0, 0.25, 0.5, 1.0})
    CHECK(max_abs_diff(
              build_noisy_channel({NoiseModel::ZxDephase, s}).matrix(),
              werner_mixture(1.0 - s).matrix()) < 1e-12);

  // depolarize: direct mixture arithmetic on |10><10|
  const SuperOperator dep = build_noisy_channel({NoiseModel::Depolarize, 0.2});
  Mat4 in = Mat4::Zero();
  in(2, 2) = 1.0;
  Mat4 expected = 0.2 * 0.25 * Mat4::Identity();
  expected(3, 3) += 0.8;
  CHECK(max_abs_diff(dep.apply(in), expected) < 1e-15);

  // local_flip: the ZZ table needs both flips absent, the XX table is
  // immune to X errors, and the YY parity flips when exactly one error hits
  const FidelityTriple f =
      evaluate_channel(build_noisy_channel({NoiseModel::LocalFlip, 0.2}));
  CHECK(std::abs(f.f1 - 0.64) < 1e-12);
  CHECK(std::abs(f.f2 - 1.0) < 1e-12);
  CHECK(std::abs(f.f3 - 0.68) < 1e-12);

  for (NoiseModel m : {NoiseModel::Werner, NoiseModel::ZxDephase,
                       NoiseModel::Depolarize, NoiseModel::LocalFlip})
    for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const SuperOperator built = build_noisy_channel({m, s});
      CHECK(is_cp(built));
      CHECK(is_tp(built));
    }

  CHECK_THROWS_AS(build_noisy_channel({NoiseModel::Werner, -0.1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_noisy_channel({NoiseModel::Depolarize, 1.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_noise_model("gauss"), std::invalid_argument);
  CHECK(parse_noise_model("local_flip") == NoiseModel::LocalFlip);
}

TEST_CASE("deterministic rows sample deterministically") {
  const SuperOperator gate = channel(ChannelName::CNOT).superop;
  for (std::uint64_t seed : {0ull, 7ull, 987654321ull}) {
    const std::vector<CountsRecord> records =
        sample_counts(gate, setting_zz(), 5000, seed);
    REQUIRE(records.size() == 4);
    // input 10 puts every shot on outcome 11
    CHECK(records[2].counts[3] == 5000);
    CHECK(records[2].counts[0] + records[2].counts[1] +
              records[2].counts[2] == 0);
  }
}

TEST_CASE("same seed reproduces the counts") {
  const SuperOperator noisy = werner_mixture(0.37);
  const auto a = sample_counts(noisy, setting_xx(), 20011, 555);
  const auto b = sample_counts(noisy, setting_xx(), 20011, 555);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i].counts == b[i].counts);
}

TEST_CASE("parallel sampler matches the serial reference") {
  for (double p : {0.3, 0.8}) {
    const SuperOperator noisy = werner_mixture(p);
    for (const BasisSetting& setting : canonical_settings()) {
      for (std::uint64_t seed : {1ull, 42ull, 0xDEADBEEFull}) {
        const auto parallel = sample_counts(noisy, setting, 10007, seed);
        const auto serial =
            sample_counts_reference(noisy, setting, 10007, seed);
        REQUIRE(parallel.size() == serial.size());
        for (std::size_t i = 0; i < parallel.size(); ++i) {
          CHECK(parallel[i].input == serial[i].input);
          CHECK(parallel[i].counts == serial[i].counts);
        }
      }
    }
  }
}

TEST_CASE("binomial concentration for the dephasing channel") {
  // input 10 splits between outcomes 10 and 11 with probability 1/2 each;
  // 3 sigma at 1e5 shots is about 474
  const std::vector<CountsRecord> records = sample_counts(
      channel(ChannelName::DEPHASE).superop, setting_zz(), 100000, 2026);
  const double sigma3 = 3.0 * std::sqrt(100000.0 * 0.25);
  CHECK(std::abs(double(records[2].counts[2]) - 50000.0) < sigma3);
  CHECK(std::abs(double(records[2].counts[3]) - 50000.0) < sigma3);
  CHECK(records[2].counts[0] == 0);
  CHECK(records[2].counts[1] == 0);
}

TEST_CASE("sampling rejects bad inputs") {
  const SuperOperator gate = channel(ChannelName::CNOT).superop;
  CHECK_THROWS_AS(sample_counts(gate, setting_zz(), 0, 1),
                  std::invalid_argument);
  // trace-preserving signed combination with genuinely negative outcome
  // probabilities: 2 CNOT - DEPHASE puts -1/2 on the dephased outcomes
  const SuperOperator signed_map =
      2.0 * gate - channel(ChannelName::DEPHASE).superop;
  REQUIRE(is_tp(signed_map));
  REQUIRE_FALSE(is_cp(signed_map));
  CHECK_THROWS_AS(sample_counts(signed_map, setting_zz(), 100, 1),
                  std::invalid_argument);
}

TEST_CASE("canonical sampling uses salted per-setting streams") {
  const SuperOperator noisy = werner_mixture(0.6);
  const std::vector<CountsRecord> all = sample_canonical(noisy, 4001, 99);
  REQUIRE(all.size() == 12);
  const std::array<BasisSetting, 3> settings = canonical_settings();
  for (std::size_t k = 0; k < settings.size(); ++k) {
    const auto expected =
        sample_counts(noisy, settings[k], 4001, 99 ^ kSettingSalt[k]);
    for (int in = 0; in < 4; ++in) {
      CHECK(all[4 * k + in].setting == settings[k]);
      CHECK(all[4 * k + in].input == in);
      CHECK(all[4 * k + in].counts == expected[in].counts);
    }
  }
}

TEST_CASE("sampled tables converge to the analytic rows") {
  for (ChannelName name : {ChannelName::CNOT, ChannelName::DEPHASE,
                           ChannelName::L1, ChannelName::L2, ChannelName::L3}) {
    const SuperOperator s = channel(name).superop;
    const std::array<BasisSetting, 3> settings = canonical_settings();
    for (std::size_t k = 0; k < settings.size(); ++k) {
      const ProbabilityTable analytic = truth_table(s, settings[k]);
      const ProbabilityTable sampled = counts_to_table(
          sample_counts(s, settings[k], 10000, 777 ^ kSettingSalt[k]));
      for (int in = 0; in < 4; ++in) {
        double tv = 0.0;
        for (int out = 0; out < 4; ++out)
          tv += std::abs(analytic.probs(in, out) - sampled.probs(in, out));
        CHECK(0.5 * tv < 0.02);
      }
    }
  }
}

TEST_CASE("counts_to_table normalizes per input") {
  CountsRecord r0{setting_zz(), 0, {84, 16, 0, 0}};
  CountsRecord r1{setting_zz(), 1, {0, 50, 0, 0}};
  CountsRecord r2{setting_zz(), 2, {0, 0, 0, 10}};
  CountsRecord r3{setting_zz(), 3, {0, 0, 200, 0}};
  const std::vector<CountsRecord> records{r0, r1, r2, r3};
  const ProbabilityTable t = counts_to_table(records);
  CHECK(t.probs(0, 0) == 0.84);
  CHECK(t.probs(0, 1) == 0.16);
  CHECK(t.probs(1, 1) == 1.0);
  CHECK(t.probs(2, 3) == 1.0);
  for (int in = 0; in < 4; ++in)
    CHECK(t.probs.row(in).sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("counts_to_table validates its records") {
  CountsRecord base{setting_zz(), 0, {10, 0, 0, 0}};
  std::vector<CountsRecord> too_few{base};
  CHECK_THROWS_AS(counts_to_table(too_few), std::invalid_argument);

  std::vector<CountsRecord> duplicate{base, base, base, base};
  CHECK_THROWS_AS(counts_to_table(duplicate), std::invalid_argument);

  std::vector<CountsRecord> mixed{
      base,
      {setting_xx(), 1, {10, 0, 0, 0}},
      {setting_zz(), 2, {10, 0, 0, 0}},
      {setting_zz(), 3, {10, 0, 0, 0}}};
  CHECK_THROWS_AS(counts_to_table(mixed), std::invalid_argument);

  std::vector<CountsRecord> empty_row{
      base,
      {setting_zz(), 1, {0, 0, 0, 0}},
      {setting_zz(), 2, {10, 0, 0, 0}},
      {setting_zz(), 3, {10, 0, 0, 0}}};
  CHECK_THROWS_AS(counts_to_table(empty_row), std::invalid_argument);
}

TEST_CASE("recovered fidelities track the channel at high shot counts") {
  const SuperOperator noisy = werner_mixture(0.5);
  const std::vector<CountsRecord> records =
      sample_canonical(noisy, 100000, 20260809);
  const std::span<const CountsRecord> all(records);
  const double f1 = fidelity_f1(counts_to_table(all.subspan(0, 4)));
  const double f2 = fidelity_f2(counts_to_table(all.subspan(4, 4)));
  const double f3 = fidelity_f3(counts_to_table(all.subspan(8, 4)));
  CHECK(std::abs(f1 - 0.75) < 0.01);
  CHECK(std::abs(f2 - 0.75) < 0.01);
  CHECK(std::abs(f3 - 0.75) < 0.01);
}

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

// Compares the parallel kernels against their serial reference twins and
// checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "cnotcert/batch.hpp"
#include "cnotcert/random.hpp"
#include "cnotcert/sampling.hpp"

namespace {

using namespace cnotcert;

template <typename F>
double timed(F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

void print_row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s %10.4f s %10.4f s %8.2fx   %s\n", name, serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel kernel benchmark"};
  std::uint64_t shots = 4000000;
  std::size_t channels = 2000;
  std::size_t states = 50000;
  app.add_option("--shots", shots, "shots per input for the sampler")
      ->capture_default_str();
  app.add_option("--channels", channels, "random channels for the sweep")
      ->capture_default_str();
  app.add_option("--states", states, "random states for the concurrence run")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n\n");
#endif
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    const SuperOperator gate = werner_mixture(0.5);
    std::vector<CountsRecord> serial, parallel;
    const double t_serial = timed([&] {
      serial = sample_counts_reference(gate, setting_zz(), shots, 42);
    });
    const double t_parallel =
        timed([&] { parallel = sample_counts(gate, setting_zz(), shots, 42); });
    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i)
      same = serial[i].counts == parallel[i].counts;
    print_row("multinomial sampling", t_serial, t_parallel, same);
  }

  {
    Rng rng(7);
    std::vector<SuperOperator> sweep;
    sweep.reserve(channels);
    for (std::size_t i = 0; i < channels; ++i)
      sweep.push_back(random_cptp_channel(rng));
    std::vector<FidelityTriple> serial, parallel;
    const double t_serial =
        timed([&] { serial = evaluate_channels_reference(sweep); });
    const double t_parallel = timed([&] { parallel = evaluate_channels(sweep); });
    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i)
      same = serial[i].f1 == parallel[i].f1 && serial[i].f2 == parallel[i].f2 &&
             serial[i].f3 == parallel[i].f3;
    print_row("channel fidelity sweep", t_serial, t_parallel, same);
  }

  {
    Rng rng(11);
    std::vector<DensityMatrix> sweep;
    sweep.reserve(states);
    for (std::size_t i = 0; i < states; ++i)
      sweep.push_back(random_density_matrix(rng));
    std::vector<double> serial, parallel;
    const double t_serial =
        timed([&] { serial = wootters_concurrences_reference(sweep); });
    const double t_parallel =
        timed([&] { parallel = wootters_concurrences(sweep); });
    print_row("concurrence sweep", t_serial, t_parallel, serial == parallel);
  }

  return 0;
}

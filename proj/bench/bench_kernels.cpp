// Copyright 2026 The qit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Timing comparison between the OpenMP kernels, the serial reference
// implementations, and single-threaded sweeps. Build target: qit_bench.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qit/kernels.hpp"
#include "qit/random.hpp"
#include "qit/sweep.hpp"

using namespace qit;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  fn();  // warm up
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
             .count() /
         reps;
}

Matrix random_matrix(int d, Rng& rng) {
  Matrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = rng.cnormal();
  return m;
}

volatile double sink;

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled (serial build)\n");
#endif

  Rng rng(2);
  std::printf("\n%-34s %10s %10s %8s\n", "kernel", "omp (ms)", "ref (ms)", "speedup");

  for (int d : {16, 32, 64}) {
    const Matrix a = random_matrix(d, rng);
    const Matrix b = random_matrix(d, rng);
    const int reps = d <= 16 ? 100 : 10;
    const double fast = time_ms([&] { sink = tensor(a, b).norm(); }, reps);
    const double ref = time_ms([&] { sink = reference::tensor(a, b).norm(); }, reps);
    std::printf("tensor %3dx%-3d x %3dx%-3d            %10.3f %10.3f %7.1fx\n", d, d, d, d,
                fast, ref, ref / fast);
  }

  for (int n : {8, 10, 12}) {
    std::vector<int> dims(static_cast<size_t>(n), 2);
    const SystemShape shape(dims);
    const Matrix rho = random_matrix(static_cast<int>(shape.total()), rng);
    const std::vector<int> keep{0, 1};
    const int reps = n <= 10 ? 20 : 5;
    const double fast = time_ms([&] { sink = partial_trace(rho, shape, keep).norm(); }, reps);
    const double ref =
        time_ms([&] { sink = reference::partial_trace(rho, shape, keep).norm(); }, reps);
    std::printf("partial_trace %2d qubits -> 2        %10.3f %10.3f %7.1fx\n", n, fast, ref,
                ref / fast);
  }

#ifdef _OPENMP
  std::printf("\n%-34s %10s %10s %8s\n", "sweep (20 trials)", "par (ms)", "1-thr (ms)",
              "speedup");
  for (const std::string& name : {std::string("presence"), std::string("no-cloning")}) {
    SweepOptions o;
    o.theorem = name;
    o.dim = 3;
    o.trials = 20;
    o.seed = 5;
    const double par = time_ms([&] { run_sweep(o); }, 1);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const double serial = time_ms([&] { run_sweep(o); }, 1);
    omp_set_num_threads(saved);
    std::printf("%-34s %10.1f %10.1f %7.1fx\n", name.c_str(), par, serial, serial / par);
  }
#endif
  return 0;
}

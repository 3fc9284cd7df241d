// benchmarks/bench_main.cpp

// Copyright 2026  gabfilt contributors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "gabfilt/equivalence.hpp"
#include "gabfilt/fourier.hpp"
#include "gabfilt/operators.hpp"
#include "gabfilt/tf.hpp"

using namespace gabfilt;

namespace {

void BM_dft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const Signal f = rng.signal(n);
  for (auto _ : state) benchmark::DoNotOptimize(dft(f));
}
BENCHMARK(BM_dft)->Arg(64)->Arg(256)->Arg(480);

void BM_stft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const Signal f = rng.signal(n);
  const Signal g = discrete_gaussian(n);
  for (auto _ : state) benchmark::DoNotOptimize(stft(f, g));
}
BENCHMARK(BM_stft)->Arg(64)->Arg(256)->Arg(480);

void BM_gm_kernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  const GaborMultiplier gm(rng.signal(n), rng.signal(n), rng.matrix(n), Lattice(n, 1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(gm_kernel(gm));
}
BENCHMARK(BM_gm_kernel)->Arg(64)->Arg(128)->Arg(480);

void BM_gm_spreading(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  const GaborMultiplier gm(rng.signal(n), rng.signal(n), rng.matrix(n), Lattice(n, 2, 2));
  for (auto _ : state) benchmark::DoNotOptimize(gm_spreading(gm));
}
BENCHMARK(BM_gm_spreading)->Arg(64)->Arg(128);

void BM_singular_spectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(5);
  const LinearOp op{rng.matrix(n)};
  for (auto _ : state) benchmark::DoNotOptimize(singular_spectrum(op, 20));
}
BENCHMARK(BM_singular_spectrum)->Arg(128)->Arg(480);

void BM_construct_symbol_full_lattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(6);
  const Signal h = rng.signal(n);
  const Signal g = discrete_gaussian(n, std::max(2.0, n / 16.0));
  for (auto _ : state) benchmark::DoNotOptimize(construct_symbol_full_lattice(h, g, g));
}
BENCHMARK(BM_construct_symbol_full_lattice)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();

// Copyright 2026 The Pentolab Authors. All Rights Reserved.
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

// Serial reference kernels against the OpenMP/BLAS production path.

#include <benchmark/benchmark.h>

#include "pentolab/autodiff.h"
#include "pentolab/factor_grid.h"
#include "pentolab/kernels.h"

namespace pentolab {
namespace {

// Encoder-sized convolution: batch 32, 32 channels, 32 x 32, 3 x 3 kernel.
struct ConvInputs {
  Tensor<float> x, w, b;
  ConvInputs(int n, int c, int side) {
    Rng rng(1);
    x = RandomNormal<float>({n, c, side, side}, 1.0, rng);
    w = RandomNormal<float>({c, c, 3, 3}, 0.1, rng);
    b = RandomNormal<float>({c}, 0.1, rng);
  }
};

void BM_Conv2dReference(benchmark::State& state) {
  const ConvInputs in(32, 32, int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::Conv2d(in.x, in.w, in.b, 1, 1));
  }
}

void BM_Conv2dParallel(benchmark::State& state) {
  const ConvInputs in(32, 32, int(state.range(0)));
  for (auto _ : state) {
    Tape<float> tape;
    benchmark::DoNotOptimize(
        ad::Conv2d(tape.Constant(in.x), tape.Constant(in.w), tape.Constant(in.b), 1, 1).value());
  }
}

void BM_ConvTranspose2dReference(benchmark::State& state) {
  const ConvInputs in(32, 32, int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::ConvTranspose2d(in.x, in.w, in.b, 2, 1));
  }
}

void BM_ConvTranspose2dParallel(benchmark::State& state) {
  const ConvInputs in(32, 32, int(state.range(0)));
  for (auto _ : state) {
    Tape<float> tape;
    benchmark::DoNotOptimize(
        ad::ConvTranspose2d(tape.Constant(in.x), tape.Constant(in.w), tape.Constant(in.b), 2, 1)
            .value());
  }
}

void BM_MatMulReference(benchmark::State& state) {
  const int n = int(state.range(0));
  Rng rng(2);
  const Tensor<float> a = RandomNormal<float>({n, n}, 1.0, rng);
  const Tensor<float> b = RandomNormal<float>({n, n}, 1.0, rng);
  Tensor<float> c({n, n});
  for (auto _ : state) {
    reference::MatMul(a.data(), b.data(), n, n, n, c.data());
    benchmark::DoNotOptimize(c.data());
  }
}

void BM_GemmParallel(benchmark::State& state) {
  const int n = int(state.range(0));
  Rng rng(2);
  const Tensor<float> a = RandomNormal<float>({n, n}, 1.0, rng);
  const Tensor<float> b = RandomNormal<float>({n, n}, 1.0, rng);
  Tensor<float> c({n, n});
  for (auto _ : state) {
    kernels::Gemm(false, false, n, n, n, 1.0f, a.data(), b.data(), 0.0f, c.data());
    benchmark::DoNotOptimize(c.data());
  }
}

// Renders 12 shapes x 3 scales x 20 rotations x 2 x 2 positions at 32 px.
FactorGrid BenchGrid() {
  std::vector<FactorSpec> specs = DeskGrid().specs();
  specs[3].values = {-1.0, 1.0};
  specs[4].values = {-1.0, 1.0};
  return FactorGrid(std::move(specs));
}

void RunGenerate(benchmark::State& state, bool parallel) {
  const FactorGrid grid = BenchGrid();
  const RenderConfig cfg = RenderConfig::ForResolution(32);
  GenerateOptions opts;
  opts.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(GenerateToStream(grid, cfg, nullptr, opts));
  state.SetItemsProcessed(state.iterations() * std::int64_t(grid.size()));
}

void BM_GenerateSerial(benchmark::State& state) { RunGenerate(state, false); }
void BM_GenerateParallel(benchmark::State& state) { RunGenerate(state, true); }

BENCHMARK(BM_Conv2dReference)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Conv2dParallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvTranspose2dReference)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvTranspose2dParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatMulReference)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GemmParallel)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateParallel)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pentolab

BENCHMARK_MAIN();

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

#ifndef PENTOLAB_SELFTEST_H_
#define PENTOLAB_SELFTEST_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pentolab/models.h"
#include "pentolab/nn.h"

namespace pentolab {

struct OpGradCase {
  std::string name;
  bool smooth = true;  // false for ops with kinks
  std::vector<Tensor<double>> inputs;
  GradCheckFn fn;
};

// Every differentiable tape op, each reduced to a scalar through a random
// weighted sum so that every output element receives a distinct gradient.
std::vector<OpGradCase> CoreOpGradCases();

inline constexpr double kSmoothOpTolerance = 1e-4;
inline constexpr double kKinkOpTolerance = 1e-3;
inline constexpr double kModelGradTolerance = 1e-3;

// Gradient check of the full training loss with respect to every parameter
// tensor (at most `per_tensor` elements each) on two rendered images. Bias
// tensors are jittered away from zero so that ReLU pre-activations do not
// sit exactly on the kink.
GradCheckResult ModelGradCheck(const ModelConfig& cfg, std::size_t per_tensor,
                               std::uint64_t seed = 21);

struct SelfTestItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Gradient checks of the core ops and the full FgSeg loss, plus geometry and
// raster invariants. Takes a few seconds.
std::vector<SelfTestItem> RunSelfTest();

}  // namespace pentolab

#endif  // PENTOLAB_SELFTEST_H_

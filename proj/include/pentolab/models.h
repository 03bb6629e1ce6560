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

// FgSeg (single-slot attention autoencoder with a sigmoid-mask decoder) and
// the Wasserstein auto-encoder baseline.

#ifndef PENTOLAB_MODELS_H_
#define PENTOLAB_MODELS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "pentolab/autodiff.h"
#include "pentolab/nn.h"
#include "pentolab/util.h"

namespace pentolab {

class BatchTooSmall : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

enum class ModelKind { kFgSeg, kWae };

std::string ModelKindName(ModelKind kind);
ModelKind ModelKindFromName(const std::string& name);  // throws ConfigError

struct ModelConfig {
  ModelKind kind = ModelKind::kFgSeg;
  int resolution = 32;  // power of two, >= 16
  int channels = 32;    // conv width of encoder and decoder
  // FgSeg.
  int slot_dim = 32;
  int iterations = 3;
  int mlp_hidden = 64;
  double attention_eps = 1e-8;
  double intensity_bias_init = 3.0;
  // Initial logit of the output that is zero on background: the FgSeg mask
  // and the WAE pixel. About the log-odds of the foreground fraction.
  double output_bias_init = -3.5;
  // WAE.
  int latent_dim = 16;
  double lambda = 10.0;

  void Validate() const;  // throws ConfigError
  nlohmann::json ToJson() const;
  static ModelConfig FromJson(const nlohmann::json& j);
};

// Resolves parameters of a bound store by name.
template <typename T>
class Params {
 public:
  Params(const ParamStore<T>& store, std::vector<Var<T>> vars)
      : store_(&store), vars_(std::move(vars)) {}
  Var<T> operator()(const std::string& name) const;

 private:
  const ParamStore<T>* store_;
  std::vector<Var<T>> vars_;
};

// Freshly initialized parameters.
ParamStore<float> InitParams(const ModelConfig& cfg, std::uint64_t seed);

template <typename T>
struct FgSegOutputs {
  Var<T> reconstruction;  // [N, 1, R, R] = mask * intensity
  Var<T> intensity;       // [N, 1, R, R]
  Var<T> mask;            // [N, 1, R, R]
  Var<T> slot;            // [N, D], after the final iteration
  Var<T> attention;       // [N, h, w], final iteration
};

template <typename T>
struct WaeOutputs {
  Var<T> reconstruction;  // [N, 1, R, R]
  Var<T> latent;          // [N, L]
};

// `images` is [N, 1, R, R] in [0, 1].
template <typename T>
FgSegOutputs<T> FgSegForward(const ModelConfig& cfg, const Params<T>& p, Var<T> images);
template <typename T>
WaeOutputs<T> WaeForward(const ModelConfig& cfg, const Params<T>& p, Var<T> images);

// Unbiased MMD^2 estimate with the inverse multiquadric kernel
// k(a, b) = c / (c + |a - b|^2), c = 2 * dim. Throws BatchTooSmall (< 2) and
// ShapeMismatch.
template <typename T>
Var<T> LatentPenalty(Var<T> latents, Var<T> prior_samples);

struct LossParts {
  double reconstruction = 0.0;  // per-pixel MSE
  double penalty = 0.0;         // WAE only, before lambda
};

// Training objective. `prior_rng` draws the WAE prior samples.
template <typename T>
Var<T> ModelLoss(const ModelConfig& cfg, const Params<T>& p, Var<T> images, Rng& prior_rng,
                 LossParts* parts = nullptr);

// Inference helpers over float parameters. `images` holds N*R*R pixels.
struct Reconstruction {
  Tensor<float> reconstruction;  // [N, 1, R, R]
  Tensor<float> mask;            // FgSeg only
  Tensor<float> embedding;       // FgSeg slot or WAE latent, [N, D]
};
Reconstruction Infer(const ModelConfig& cfg, const ParamStore<float>& params,
                     const Tensor<float>& images);

}  // namespace pentolab

#endif  // PENTOLAB_MODELS_H_

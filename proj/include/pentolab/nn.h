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

// Parameter storage, optimizers, finite-difference gradient checks and the
// checkpoint format shared by every model.

#ifndef PENTOLAB_NN_H_
#define PENTOLAB_NN_H_

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pentolab/autodiff.h"

namespace pentolab {

// Named parameter tensors in registration order. Tensors are values: copying
// a store copies every parameter.
template <typename T>
class ParamStore {
 public:
  // Registers a parameter; names must be unique.
  int Add(std::string name, Tensor<T> value);
  int Find(const std::string& name) const;  // -1 when absent
  std::size_t size() const { return values_.size(); }
  const std::string& name(int i) const { return names_[std::size_t(i)]; }
  Tensor<T>& operator[](int i) { return values_[std::size_t(i)]; }
  const Tensor<T>& operator[](int i) const { return values_[std::size_t(i)]; }
  std::size_t NumScalars() const;

  // Places every parameter on `tape` as a leaf, in registration order.
  std::vector<Var<T>> Bind(Tape<T>& tape) const;
  // Gradients of the bound leaves after backward.
  std::vector<Tensor<T>> Grads(const Tape<T>& tape, const std::vector<Var<T>>& bound) const;

  template <typename U>
  ParamStore<U> Cast() const {
    ParamStore<U> out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      out.Add(names_[i], values_[i].template Cast<U>());
    }
    return out;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Tensor<T>> values_;
};

// Adaptive-moment optimizer with bias correction.
struct AdamConfig {
  double lr = 4e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

class Adam {
 public:
  Adam(AdamConfig cfg, const ParamStore<float>& params);

  // One update; `grads` aligns with the store. Throws ShapeMismatch.
  void Step(ParamStore<float>& params, const std::vector<Tensor<float>>& grads);

  const AdamConfig& config() const { return cfg_; }
  void set_lr(double lr) { cfg_.lr = lr; }
  long step() const { return step_; }
  const std::vector<Tensor<float>>& first_moments() const { return m_; }
  const std::vector<Tensor<float>>& second_moments() const { return v_; }
  void Restore(long step, std::vector<Tensor<float>> m, std::vector<Tensor<float>> v);

 private:
  AdamConfig cfg_;
  long step_ = 0;
  std::vector<Tensor<float>> m_, v_;
};

// Scalar-valued function of the bound inputs.
using GradCheckFn = std::function<Var<double>(Tape<double>&, const std::vector<Var<double>>&)>;

struct GradCheckResult {
  double max_rel_error = 0.0;
  double max_abs_error = 0.0;
  int worst_input = -1;
  std::size_t worst_index = 0;
  double worst_analytic = 0.0;
  double worst_numeric = 0.0;
  std::size_t checked = 0;
  std::size_t kink_skipped = 0;
};

// Compares reverse-mode gradients against central differences. Per element
// the error is |analytic - numeric| / max(|analytic|, |numeric|, atol); the
// result is the maximum. Elements whose +-eps perturbation flips a ReLU
// branch have no central-difference derivative; they are counted in
// `kink_skipped` and excluded from the maximum. When `max_per_input` is
// nonzero, that many evenly strided elements of each input are checked
// instead of all of them.
GradCheckResult GradCheck(const GradCheckFn& fn, const std::vector<Tensor<double>>& inputs,
                          double eps = 1e-3, double atol = 1e-6, std::size_t max_per_input = 0);

// Checkpoint: one JSON header line, then raw little-endian f32 blobs in header
// order. The header lists parameters and, when present, Adam moments.
struct Checkpoint {
  ParamStore<float> params;
  nlohmann::json meta = nlohmann::json::object();
  bool has_optimizer = false;
  AdamConfig adam;
  long adam_step = 0;
  std::vector<Tensor<float>> adam_m, adam_v;
};

// Writes atomically via a temporary file. Throws IoError.
void SaveCheckpoint(const std::string& path, const ParamStore<float>& params,
                    const nlohmann::json& meta, const Adam* optimizer = nullptr);
// Throws IoError or ValidationError.
Checkpoint LoadCheckpoint(const std::string& path);

}  // namespace pentolab

#endif  // PENTOLAB_NN_H_

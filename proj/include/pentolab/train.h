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

// Training loop shared by FgSeg and the WAE.

#ifndef PENTOLAB_TRAIN_H_
#define PENTOLAB_TRAIN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "pentolab/factor_grid.h"
#include "pentolab/models.h"
#include "pentolab/split.h"

namespace pentolab {

// Raised when a step produces a non-finite loss.
class NonFiniteLoss : public Error {
 public:
  using Error::Error;
};

struct TrainConfig {
  ModelConfig model;
  std::uint64_t seed = 1;
  int batch_size = 16;
  long steps = 30000;
  double lr = 4e-4;
  long warmup_steps = 1000;  // linear learning-rate warmup
  long log_every = 100;
  long eval_every = 2000;
  int eval_samples = 256;  // per side, drawn once from train and test
  long checkpoint_every = 5000;

  void Validate() const;  // throws ConfigError
  nlohmann::json ToJson() const;
  // Missing keys keep their defaults.
  static TrainConfig FromJson(const nlohmann::json& j);
};

struct TrainLogEntry {
  long step = 0;
  double loss = 0.0;            // mean total loss since the previous entry
  double reconstruction = 0.0;  // mean per-pixel MSE since the previous entry
  double penalty = 0.0;
  double seconds = 0.0;
  bool has_eval = false;
  double eval_train_pmse = 0.0;
  double eval_test_pmse = 0.0;

  nlohmann::json ToJson() const;
};

struct TrainResult {
  ParamStore<float> params;
  std::vector<double> step_losses;  // total loss of every step
  std::vector<TrainLogEntry> log;
};

struct TrainOutputs {
  std::string dir;  // empty: keep everything in memory
  bool quiet = true;
};

// Minimizes the model loss over rebalanced training batches. With an output
// directory it writes config.json, train_log.jsonl and checkpoint.bin
// (periodically and at the end). Throws ValidationError on mismatched inputs
// and NonFiniteLoss.
TrainResult Train(const TrainConfig& cfg, const DatasetArchive& archive,
                  const SplitManifest& manifest, const TrainOutputs& outputs = {});

// Metadata stored in checkpoints produced by Train.
nlohmann::json CheckpointMeta(const TrainConfig& cfg, const DatasetArchive& archive,
                              const SplitManifest& manifest, long step);

// Model config recorded in a checkpoint's metadata.
ModelConfig ModelConfigOf(const Checkpoint& ck);

}  // namespace pentolab

#endif  // PENTOLAB_TRAIN_H_

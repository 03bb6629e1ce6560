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

// Reconstruction metrics and the evaluation report.

#ifndef PENTOLAB_METRICS_H_
#define PENTOLAB_METRICS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pentolab/factor_grid.h"
#include "pentolab/models.h"
#include "pentolab/split.h"

namespace pentolab {

// Dequantized images as [N, 1, H, W].
Tensor<float> LoadImages(const DatasetArchive& archive, std::span<const FactorGrid::Index> indices);

// Per-image sums of squared pixel errors. Inputs are [N, ...]; throws
// ShapeMismatch.
std::vector<double> PerImageSquaredError(const Tensor<float>& a, const Tensor<float>& b);
// Pixel-wise sum of squared errors averaged over images.
double Pmse(const Tensor<float>& a, const Tensor<float>& b);

struct PmseStats {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
  std::vector<double> per_image;  // aligned with the evaluated indices
};

// P-MSE of the model over `indices`, evaluated in fixed-size batches.
PmseStats EvaluatePmse(const ModelConfig& cfg, const ParamStore<float>& params,
                       const DatasetArchive& archive, std::span<const FactorGrid::Index> indices,
                       int batch_size = 64);

// `n` distinct indices drawn uniformly from `pool` (all of them when
// n == 0 or n >= |pool|), returned sorted.
std::vector<FactorGrid::Index> SampleIndices(std::span<const FactorGrid::Index> pool, std::size_t n,
                                             std::uint64_t seed);

struct EvalOptions {
  std::size_t train_samples = 4096;
  std::size_t test_samples = 0;  // 0 = full test split
  std::uint64_t seed = 1;
};

inline constexpr int kMetricsReportVersion = 1;

struct MetricsReport {
  std::string model_id;
  std::string split_id;
  PmseStats train;
  PmseStats test;
  nlohmann::json probes = nlohmann::json::array();
  std::string timestamp;
  std::string config_hash;

  // Per-image errors are omitted; see PerImageCsv.
  nlohmann::json ToJson() const;
};

// Train P-MSE over a uniform sample of training combinations and test P-MSE
// over the held-out split. Throws ValidationError when manifest and archive
// grids differ.
MetricsReport Evaluate(const ModelConfig& cfg, const ParamStore<float>& params,
                       const DatasetArchive& archive, const SplitManifest& manifest,
                       const EvalOptions& opts);

// "split,index,shape,scale,rotation,posX,posY,sq_error" rows.
std::string PerImageCsv(const FactorGrid& grid, const MetricsReport& report,
                        std::span<const FactorGrid::Index> train_indices,
                        std::span<const FactorGrid::Index> test_indices);

// Throws ValidationError unless the manifest was built for the archive grid
// and the archive resolution matches the model.
void CheckCompatible(const DatasetArchive& archive, const SplitManifest& manifest);

// ISO-8601 UTC timestamp.
std::string UtcTimestamp();

}  // namespace pentolab

#endif  // PENTOLAB_METRICS_H_

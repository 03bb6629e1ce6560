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

#ifndef PENTOLAB_PROBES_H_
#define PENTOLAB_PROBES_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pentolab/errors.h"
#include "pentolab/factor_grid.h"
#include "pentolab/models.h"
#include "pentolab/split.h"

namespace pentolab {

class DegenerateLabels : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Rows of frozen model embeddings with their factor labels.
struct EmbeddingSet {
  int dim = 0;
  std::vector<double> values;  // rows() x dim, row-major
  std::vector<int> shapes;     // shape ordinal per row
  std::vector<double> rotations;
  std::vector<FactorGrid::Index> indices;
  bool held_out = false;  // rows come from held-out combinations

  std::size_t rows() const { return shapes.size(); }
  const double* row(std::size_t i) const { return values.data() + i * std::size_t(dim); }
  // Appends one row; throws ShapeMismatch on a dimension change.
  void Add(std::span<const double> embedding, int shape, double rotation,
           FactorGrid::Index index = 0);
};

// FgSeg: final slot vector. WAE: latent.
EmbeddingSet ExtractEmbeddings(const ModelConfig& cfg, const ParamStore<float>& params,
                               const DatasetArchive& archive,
                               std::span<const FactorGrid::Index> indices, bool held_out,
                               int batch_size = 64);

enum class ProbeKind { kLinear, kMlp, kSvm, kRotation };
std::string ProbeKindName(ProbeKind kind);

struct ProbeOptions {
  std::uint64_t seed = 1;
  // Linear: multinomial logistic regression trained by minibatch SGD.
  int linear_epochs = 100;
  double linear_lr = 0.05;
  // MLP: one ReLU hidden layer trained with Adam.
  int mlp_hidden = 256;
  int mlp_epochs = 200;
  double mlp_lr = 1e-3;
  int batch_size = 64;
  // SVM: one-vs-rest RBF machines solved by SMO.
  std::size_t svm_max_rows = 5000;
  double svm_c = 10.0;
  double svm_tolerance = 1e-3;

  nlohmann::json ToJson() const;
};

struct ProbeReport {
  ProbeKind kind = ProbeKind::kLinear;
  // Classification probes, in percent.
  double train_accuracy = 0.0;
  double test_accuracy = 0.0;
  double majority_accuracy = 0.0;  // majority-class predictor on the train rows
  // Rotation regressor, on rotation / 360.
  double train_mse = 0.0;
  double test_mse = 0.0;
  std::size_t train_rows = 0;
  std::size_t test_rows = 0;
  double kkt_violation = 0.0;  // SVM: worst violation over all machines
  nlohmann::json hyperparameters = nlohmann::json::object();

  nlohmann::json ToJson() const;
};

// Features are standardized with train-row statistics. Every probe throws
// DegenerateLabels if the train rows hold a single class.
ProbeReport FitLinearProbe(const EmbeddingSet& train, const EmbeddingSet& test,
                           const ProbeOptions& opts);
ProbeReport FitMlpProbe(const EmbeddingSet& train, const EmbeddingSet& test,
                        const ProbeOptions& opts);
ProbeReport FitSvmProbe(const EmbeddingSet& train, const EmbeddingSet& test,
                        const ProbeOptions& opts);
// Least-squares linear map to rotation / 360 with plain MSE.
ProbeReport FitRotationRegressor(const EmbeddingSet& train, const EmbeddingSet& test,
                                 const ProbeOptions& opts);

// Runs all four probes; they are independent and run concurrently.
std::vector<ProbeReport> RunProbes(const EmbeddingSet& train, const EmbeddingSet& test,
                                   const ProbeOptions& opts);

// Binary RBF support vector machine, exposed for testing the solver.
struct SvmModel {
  std::vector<double> alpha;  // per training row, in [0, C]
  std::vector<int> labels;    // +1 / -1
  double rho = 0.0;           // decision value = sum alpha_j y_j K(x_j, x) - rho
  double kkt_violation = 0.0;
  long iterations = 0;
};
// `kernel` is the n x n Gram matrix, row-major.
SvmModel SolveSvm(const std::vector<float>& kernel, const std::vector<int>& labels, double c,
                  double tolerance);

struct ProbeRun {
  EmbeddingSet train;
  EmbeddingSet test;
  std::vector<ProbeReport> reports;
};

// Train rows: a seeded sample of `train_rows` training combinations. Test
// rows: a seeded sample of `test_rows` held-out combinations (0 = all).
ProbeRun ProbeModel(const ModelConfig& cfg, const ParamStore<float>& params,
                    const DatasetArchive& archive, const SplitManifest& manifest,
                    std::size_t train_rows, std::size_t test_rows, const ProbeOptions& opts);

std::string EmbeddingsCsv(const EmbeddingSet& set);

}  // namespace pentolab

#endif  // PENTOLAB_PROBES_H_

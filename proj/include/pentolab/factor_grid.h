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

// The Cartesian grid of generative factors (shape, scale, rotation, posX,
// posY), the on-disk dataset archive, and the shape-rebalanced sampler.

#ifndef PENTOLAB_FACTOR_GRID_H_
#define PENTOLAB_FACTOR_GRID_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pentolab/errors.h"
#include "pentolab/raster.h"
#include "pentolab/util.h"

namespace pentolab {

enum class Factor : int { kShape = 0, kScale, kRotation, kPosX, kPosY };
inline constexpr int kNumFactors = 5;
inline constexpr std::array<const char*, kNumFactors> kFactorNames = {"shape", "scale", "rotation",
                                                                      "posX", "posY"};

// Shape values are stored as ordinals; numeric values are rounded to float
// precision on construction so that archive round trips are exact.
struct FactorSpec {
  std::string name;
  std::vector<double> values;
};

class FactorGrid {
 public:
  using Index = std::uint64_t;
  using Coords = std::array<int, kNumFactors>;

  // Specs must come in canonical factor order; values must be distinct.
  explicit FactorGrid(std::vector<FactorSpec> specs);

  const std::vector<FactorSpec>& specs() const { return specs_; }
  const FactorSpec& spec(Factor f) const { return specs_[int(f)]; }
  std::size_t count(Factor f) const { return specs_[int(f)].values.size(); }
  Index size() const { return size_; }

  Coords CoordsOf(Index index) const;
  Index IndexOf(const Coords& coords) const;
  FactorCombination FactorsOf(Index index) const;
  // Throws UnknownValue when a value is not in the grid.
  Index IndexOf(const FactorCombination& f) const;
  ShapeId ShapeOf(Index index) const {
    return static_cast<ShapeId>(specs_[0].values[index / strides_[0]]);
  }
  double ValueOf(Index index, Factor f) const {
    return specs_[int(f)].values[(index / strides_[int(f)]) % count(f)];
  }
  // Position of `value` in the value list of `f`, or -1.
  int ValueIndex(Factor f, double value) const;

  // Hash of the binary factor-table encoding; identifies the grid.
  std::uint64_t Checksum() const;
  nlohmann::json ToJson() const;
  static FactorGrid FromJson(const nlohmann::json& j);

  bool operator==(const FactorGrid& other) const { return specs_ == other.specs_; }

 private:
  std::vector<FactorSpec> specs_;
  std::array<Index, kNumFactors> strides_{};
  Index size_ = 0;
};

inline bool operator==(const FactorSpec& a, const FactorSpec& b) {
  return a.name == b.name && a.values == b.values;
}

// `count` evenly spaced values from `first` to `last`, endpoints included.
std::vector<double> EvenlySpaced(double first, double last, int count);

// 12 shapes x 5 scales x 40 rotations x 20 x 20 positions = 960,000.
FactorGrid DefaultGrid();
// 12 x 3 x 20 x 8 x 8 = 46,080 (rendered at 32x32).
FactorGrid DeskGrid();
FactorGrid GridByName(const std::string& name);  // "default" | "desk"

// Midpoint convention: for even-length lists, the lower central value.
double MidpointValue(const FactorSpec& spec);

// ---------------------------------------------------------------------------
// Dataset archive.
//
// Little-endian: "PNTD", u32 version, u16 H, u16 W, u32 factor count, then per
// factor a u32-length-prefixed UTF-8 name, u32 value count and values (u8
// ordinals for "shape", f32 otherwise), u64 N, N*H*W payload bytes, and a
// trailing u64 FNV-1a checksum of the payload.

inline constexpr std::uint32_t kArchiveVersion = 1;

struct GenerateOptions {
  bool parallel = true;
  std::size_t chunk = 2048;  // images rendered per ordered write
};

struct ArchiveSummary {
  std::uint64_t count = 0;
  std::uint64_t payload_checksum = 0;
  std::uint64_t grid_checksum = 0;
};

// Writes the archive to `out`; pass nullptr to compute the checksum only.
ArchiveSummary GenerateToStream(const FactorGrid& grid, const RenderConfig& cfg, std::ostream* out,
                                const GenerateOptions& opts = {});

// Writes `path` and the JSON sidecar `path + ".json"`.
ArchiveSummary Generate(const FactorGrid& grid, const RenderConfig& cfg, const std::string& path,
                        const GenerateOptions& opts = {});

// Read-only memory-mapped archive.
class DatasetArchive {
 public:
  static DatasetArchive Open(const std::string& path);

  DatasetArchive(DatasetArchive&&) noexcept;
  DatasetArchive& operator=(DatasetArchive&&) noexcept;
  ~DatasetArchive();

  const FactorGrid& grid() const { return *grid_; }
  int height() const { return height_; }
  int width() const { return width_; }
  std::uint64_t count() const { return count_; }
  std::uint64_t payload_checksum() const { return checksum_; }
  const std::string& path() const { return path_; }
  // Render settings from the sidecar, when present.
  const nlohmann::json& sidecar() const { return sidecar_; }

  std::span<const std::uint8_t> Bytes(std::uint64_t index) const;
  // Dequantized image.
  Image Load(std::uint64_t index) const;
  // Copies dequantized pixels of `index` into `dst` (H*W floats).
  void LoadInto(std::uint64_t index, float* dst) const;

  // Recomputes the payload hash and compares it with the trailer.
  bool VerifyPayload() const;

 private:
  DatasetArchive() = default;

  std::string path_;
  void* map_ = nullptr;
  std::size_t map_size_ = 0;
  const std::uint8_t* payload_ = nullptr;
  std::unique_ptr<FactorGrid> grid_;
  int height_ = 0;
  int width_ = 0;
  std::uint64_t count_ = 0;
  std::uint64_t checksum_ = 0;
  nlohmann::json sidecar_;
};

nlohmann::json RenderConfigToJson(const RenderConfig& cfg);
RenderConfig RenderConfigFromJson(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Shape-rebalanced sampling: each train index i gets weight proportional to
// 1 / |{j in train : shape(j) == shape(i)}|, so every shape present in
// training carries equal total mass.

class EmptyShapeClass : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

struct SampleWeights {
  std::vector<FactorGrid::Index> indices;  // sorted train indices
  std::vector<double> weights;             // aligned, sums to 1

  double MassOfShape(const FactorGrid& grid, ShapeId shape) const;
};

SampleWeights RebalancedWeights(const FactorGrid& grid,
                                std::span<const FactorGrid::Index> train_indices);

// Inverse-CDF sampler over SampleWeights.
class WeightedSampler {
 public:
  explicit WeightedSampler(const SampleWeights& weights);
  FactorGrid::Index Draw(Rng& rng) const;

 private:
  const SampleWeights* weights_;
  std::vector<double> cumulative_;
};

std::vector<FactorGrid::Index> SampleBatch(const SampleWeights& weights, std::uint64_t seed,
                                           std::size_t batch_size);

}  // namespace pentolab

#endif  // PENTOLAB_FACTOR_GRID_H_

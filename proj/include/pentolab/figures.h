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

#ifndef PENTOLAB_FIGURES_H_
#define PENTOLAB_FIGURES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pentolab/factor_grid.h"
#include "pentolab/models.h"
#include "pentolab/split.h"

namespace pentolab {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kTrainFrame{150, 150, 150};
inline constexpr Rgb kHeldOutFrame{220, 30, 30};

struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major RGB

  RgbImage() = default;
  RgbImage(int w, int h, Rgb fill = kWhite);
  Rgb at(int x, int y) const;
  void set(int x, int y, Rgb c);
  bool operator==(const RgbImage&) const = default;
};

// 8-bit RGB PNG without timestamps, so equal images give equal bytes.
void WritePng(const std::string& path, const RgbImage& image);  // throws IoError
RgbImage ReadPng(const std::string& path);                      // throws IoError

struct FigureModel {
  std::string label;
  ModelConfig cfg;
  const ParamStore<float>* params = nullptr;
};

// One thumbnail position of a figure.
struct FigureCell {
  FactorGrid::Index index = 0;
  double rotation = 0.0;
  bool held_out = false;
  int x = 0, y = 0;  // top-left corner of the ground-truth thumbnail
};

struct Figure {
  RgbImage image;
  std::vector<FigureCell> cells;
  int thumb = 0;  // thumbnail side in pixels
};

struct CircleOptions {
  ShapeId shape = ShapeId::F;
  int zoom = 3;  // thumbnail pixels per image pixel
};

// Ground-truth thumbnails on an inner circle at their rotation angle, one
// outer ring of reconstructions per model. Every rotation of the grid gets a
// position; held-out combinations get a red frame, training ones a grey one.
// Scale and position are fixed at their midpoint values.
Figure RotationCircleFigure(const std::vector<FigureModel>& models, const DatasetArchive& archive,
                            const SplitManifest& manifest, const CircleOptions& opts);

// Per shape a row of targets over a row of reconstructions at 10 rotations
// evenly spaced over [180, 360); other factors at their midpoint values.
Figure RotationGridFigure(const FigureModel& model, const DatasetArchive& archive,
                          const SplitManifest& manifest, const std::vector<ShapeId>& shapes,
                          int zoom = 3);

inline constexpr int kGridColumns = 10;

// The grid rotation values closest to 10 evenly spaced angles in [180, 360).
std::vector<double> GridFigureRotations(const FactorGrid& grid);

}  // namespace pentolab

#endif  // PENTOLAB_FIGURES_H_

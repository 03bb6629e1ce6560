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

// Deterministic anti-aliased rendering of a placed pentomino.
//
// Coverage is the fraction of supersample x supersample sample points of a
// pixel that fall inside the polygon (even-odd rule, half-open edges). The
// scanline kernel and the brute-force reference produce bit-identical images
// whenever the supersampling factor is a power of two.

#ifndef PENTOLAB_RASTER_H_
#define PENTOLAB_RASTER_H_

#include <cstdint>
#include <vector>

#include "pentolab/geometry.h"

namespace pentolab {

struct FactorCombination {
  ShapeId shape = ShapeId::F;
  double scale = 1.0;
  double rotation = 0.0;  // degrees
  double pos_x = 0.0;     // [-1, 1]
  double pos_y = 0.0;     // [-1, 1]
};

struct RenderConfig {
  int resolution = 64;
  double cell_px = 2.3;
  // Fraction of the half-canvas reserved for the shape footprint; positions
  // travel over the remaining (1 - margin) fraction.
  double margin = 0.5;
  int supersample = 32;

  // cell_px sized so that a shape of max_scale at an extreme position sits
  // just inside the canvas.
  static RenderConfig ForResolution(int resolution, double max_scale = 2.7);
  void Validate() const;  // throws ConfigError
  double travel_px() const { return 0.5 * resolution * (1.0 - margin); }
};

struct Image {
  int height = 0;
  int width = 0;
  std::vector<float> pixels;  // row-major, [0, 1]

  Image() = default;
  Image(int h, int w) : height(h), width(w), pixels(std::size_t(h) * w, 0.f) {}
  float at(int row, int col) const { return pixels[std::size_t(row) * width + col]; }
  float& at(int row, int col) { return pixels[std::size_t(row) * width + col]; }
  bool operator==(const Image&) const = default;
};

// Outline in pixel coordinates (x right, y down): scaled by
// scale * cell_px, rotated about the cell-set centroid and translated so that
// (pos_x, pos_y) in [-1, 1]^2 maps linearly onto the clip-safe region.
// Rotations are reduced modulo 360 / symmetry order first, so symmetric
// rotations produce identical vertex lists. Throws ConfigError when the
// shape could leave the canvas.
OutlinePolygon Place(const PentominoGeometry& geom, const FactorCombination& f,
                     const RenderConfig& cfg);
OutlinePolygon Place(const FactorCombination& f, const RenderConfig& cfg);

// Scanline coverage kernel.
Image Rasterize(const OutlinePolygon& poly, const RenderConfig& cfg);

// Geometry -> Place -> Rasterize.
Image Render(const FactorCombination& f, const RenderConfig& cfg);

// Renders into an 8-bit buffer of resolution^2 bytes (round-to-nearest).
void RenderQuantized(const FactorCombination& f, const RenderConfig& cfg, std::uint8_t* out);

inline std::uint8_t Quantize(float v) { return static_cast<std::uint8_t>(v * 255.f + 0.5f); }

namespace reference {

// One point-in-polygon test per sample point. Slow; kept for testing.
Image Rasterize(const OutlinePolygon& poly, const RenderConfig& cfg);

}  // namespace reference

}  // namespace pentolab

#endif  // PENTOLAB_RASTER_H_

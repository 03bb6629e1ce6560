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

// The twelve free pentominoes: cell sets, outlines, rotational symmetry and
// the census of low-level outline features (segments, convex and concave
// right angles).

#ifndef PENTOLAB_GEOMETRY_H_
#define PENTOLAB_GEOMETRY_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pentolab {

enum class ShapeId : std::uint8_t { F, I, L, N, P, T, U, V, W, X, Y, Z };

inline constexpr int kNumShapes = 12;
inline constexpr int kCellsPerShape = 5;

inline constexpr std::array<ShapeId, kNumShapes> kAllShapes = {
    ShapeId::F, ShapeId::I, ShapeId::L, ShapeId::N, ShapeId::P, ShapeId::T,
    ShapeId::U, ShapeId::V, ShapeId::W, ShapeId::X, ShapeId::Y, ShapeId::Z};

inline constexpr int Ordinal(ShapeId s) { return static_cast<int>(s); }
std::string_view ShapeName(ShapeId s);
std::optional<ShapeId> ShapeFromName(std::string_view name);
ShapeId ShapeFromOrdinal(int ordinal);  // throws ConfigError outside 0..11

struct Cell {
  int col = 0;
  int row = 0;
  auto operator<=>(const Cell&) const = default;
};

// Five unit squares, anchor-normalized (min col = min row = 0) and sorted.
struct PentominoGeometry {
  std::array<Cell, kCellsPerShape> cells{};
  bool operator==(const PentominoGeometry&) const = default;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point2&) const = default;
};

// Closed polygon; the closing edge from back() to front() is implicit.
struct OutlinePolygon {
  std::vector<Point2> vertices;
};

struct FeatureCensus {
  int straight_segments = 0;
  int convex_corners = 0;
  int concave_corners = 0;
};

// Canonical cell set. The orientation is the 0-degree pose for rendering and
// is mirrored in data/shapes.json.
const PentominoGeometry& Geometry(ShapeId shape);

// Sorts and translates an arbitrary 5-cell set so that min col = min row = 0.
PentominoGeometry Normalize(std::array<Cell, kCellsPerShape> cells);

// Quarter turn (x, y) -> (-y, x) followed by normalization.
PentominoGeometry RotateQuarter(const PentominoGeometry& geom);

// True when the cells are distinct and 4-connected.
bool IsValidPentomino(const PentominoGeometry& geom);

// Boundary of the union of the unit squares, counter-clockwise with positive
// shoelace area, collinear runs merged into single edges.
OutlinePolygon Outline(const PentominoGeometry& geom);

// Smallest k in {1, 2, 4} such that a 360/k degree turn maps the cell set
// onto itself up to translation.
int SymmetryOrder(ShapeId shape);
int SymmetryOrder(const PentominoGeometry& geom);

// Corners are classified by turn direction along the CCW outline: a left
// turn is convex, a right turn concave.
FeatureCensus Census(const PentominoGeometry& geom);

double SignedArea(const OutlinePolygon& poly);
Point2 Centroid(const PentominoGeometry& geom);

// Largest distance from the cell-set centroid to an outline vertex, over all
// twelve shapes, in cell units. Bounds the footprint under any rotation.
double MaxCentroidRadius();

// Golden-file IO. The file maps each shape name to its five [col, row] pairs.
std::array<PentominoGeometry, kNumShapes> LoadShapesJson(const std::string& path);
std::string ShapesJson();

}  // namespace pentolab

#endif  // PENTOLAB_GEOMETRY_H_

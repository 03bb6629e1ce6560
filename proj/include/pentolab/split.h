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

// Generalisation conditions over factor values and the train/test splits they
// induce.
//
//   expr       := or_expr
//   or_expr    := and_expr ("or" and_expr)*
//   and_expr   := not_expr ("and" not_expr)*
//   not_expr   := "not" not_expr | atom
//   atom       := "(" expr ")"
//               | factor cmp value             cmp in == != < <= > >= (= is ==)
//               | factor "in" "{" value ("," value)* "}"
//
// Categorical factors (shape) admit == != and in, with identifier values.
// Numeric factors admit every comparison, with number values.

#ifndef PENTOLAB_SPLIT_H_
#define PENTOLAB_SPLIT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pentolab/errors.h"
#include "pentolab/factor_grid.h"

namespace pentolab {

class SyntaxError : public ConfigError {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : ConfigError("syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownFactor : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class TypeMismatch : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class DegenerateSplit : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class UnknownPreset : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

enum class CompareOp { kEq, kNe, kLt, kLe, kGt, kGe };

// Literal: shape name or real number.
using Literal = std::variant<std::string, double>;

struct ConditionExpr {
  enum class Kind { kCompare, kMember, kAnd, kOr, kNot };

  Kind kind = Kind::kCompare;
  Factor factor = Factor::kShape;  // kCompare / kMember
  CompareOp op = CompareOp::kEq;   // kCompare
  std::vector<Literal> values;     // one for kCompare, the set for kMember
  std::vector<ConditionExpr> children;

  bool operator==(const ConditionExpr&) const = default;
};

ConditionExpr ParseCondition(std::string_view text);

// Canonical text; ParseCondition(Print(e)) == e.
std::string Print(const ConditionExpr& expr);

// Checks that every shape literal names a value of the grid. Throws
// UnknownValue.
void Validate(const ConditionExpr& expr, const FactorGrid& grid);

// Direct evaluation on factor values.
bool Evaluate(const ConditionExpr& expr, const FactorCombination& f);

struct SplitManifest {
  std::string condition;  // source text
  std::string preset;     // empty for ad hoc conditions
  bool dedup = true;
  std::uint64_t grid_checksum = 0;
  nlohmann::json grid;  // grid description
  std::vector<FactorGrid::Index> train;
  std::vector<FactorGrid::Index> test;
  std::vector<FactorGrid::Index> removed;
  SampleWeights weights;

  nlohmann::json ToJson() const;
  static SplitManifest FromJson(const nlohmann::json& j);
  void Save(const std::string& path) const;
  static SplitManifest Load(const std::string& path);
};

// test = indices satisfying `expr`; with `dedup`, training-side indices
// whose rotation is >= 360 / symmetry order are removed (only the rotations
// below one symmetry period are kept). Throws DegenerateSplit when either
// side is empty.
SplitManifest Materialize(const FactorGrid& grid, const ConditionExpr& expr, bool dedup,
                          bool parallel = true);

// shape-rotation, one-novel-shape, three-novel-shapes, six-novel-shapes.
ConditionExpr Preset(const std::string& name);
std::string PresetText(const std::string& name);
const std::vector<std::string>& PresetNames();

// Run-length encoding of a sorted index set as alternating run lengths over
// [0, n), starting with a run of non-members.
std::vector<std::uint64_t> EncodeRuns(const std::vector<FactorGrid::Index>& sorted,
                                      std::uint64_t n);
std::vector<FactorGrid::Index> DecodeRuns(const std::vector<std::uint64_t>& runs);

}  // namespace pentolab

#endif  // PENTOLAB_SPLIT_H_

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

// Dense row-major tensors. Tensor is a value type: copying a Tensor copies
// its buffer, so two tensors never share storage.

#ifndef PENTOLAB_TENSOR_H_
#define PENTOLAB_TENSOR_H_

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "pentolab/errors.h"
#include "pentolab/util.h"

namespace pentolab {

using Shape = std::vector<int>;

inline std::size_t NumElements(const Shape& s) {
  std::size_t n = 1;
  for (int d : s) n *= std::size_t(d);
  return n;
}

std::string ShapeString(const Shape& s);

template <typename T>
class Tensor {
 public:
  using value_type = T;

  Tensor() = default;
  explicit Tensor(Shape shape, T fill = T(0))
      : shape_(std::move(shape)), data_(NumElements(shape_), fill) {
    for (int d : shape_) {
      if (d < 0) throw ShapeMismatch("negative dimension in " + ShapeString(shape_));
    }
  }
  Tensor(Shape shape, std::vector<T> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != NumElements(shape_)) {
      throw ShapeMismatch("data length " + std::to_string(data_.size()) +
                          " != " + ShapeString(shape_));
    }
  }
  static Tensor Scalar(T v) { return Tensor(Shape{}, std::vector<T>{v}); }

  const Shape& shape() const { return shape_; }
  int dim(int axis) const { return shape_[std::size_t(axis < 0 ? axis + rank() : axis)]; }
  int rank() const { return int(shape_.size()); }
  std::size_t size() const { return data_.size(); }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::span<T> span() { return data_; }
  std::span<const T> span() const { return data_; }
  std::vector<T>& vec() { return data_; }
  const std::vector<T>& vec() const { return data_; }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }
  T item() const {
    if (data_.size() != 1) throw ShapeMismatch("item() on " + ShapeString(shape_));
    return data_[0];
  }

  // Same buffer, new shape with equal element count.
  Tensor Reshaped(Shape shape) const& {
    Tensor t = *this;
    t.Reshape(std::move(shape));
    return t;
  }
  void Reshape(Shape shape) {
    if (NumElements(shape) != data_.size()) {
      throw ShapeMismatch("cannot reshape " + ShapeString(shape_) + " to " + ShapeString(shape));
    }
    shape_ = std::move(shape);
  }

  void Fill(T v) { std::fill(data_.begin(), data_.end(), v); }

  template <typename U>
  Tensor<U> Cast() const {
    return Tensor<U>(shape_, std::vector<U>(data_.begin(), data_.end()));
  }

  bool operator==(const Tensor&) const = default;

 private:
  Shape shape_;
  std::vector<T> data_;
};

// Gaussian N(0, stddev^2) and uniform U(-bound, bound) initializers.
template <typename T>
Tensor<T> RandomNormal(Shape shape, double stddev, Rng& rng) {
  Tensor<T> t(std::move(shape));
  for (auto& v : t.vec()) v = T(stddev * rng.Normal());
  return t;
}

template <typename T>
Tensor<T> RandomUniform(Shape shape, double bound, Rng& rng) {
  Tensor<T> t(std::move(shape));
  for (auto& v : t.vec()) v = T(bound * (2 * rng.Uniform() - 1));
  return t;
}

}  // namespace pentolab

#endif  // PENTOLAB_TENSOR_H_

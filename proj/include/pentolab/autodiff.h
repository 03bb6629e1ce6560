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

// Reverse-mode automatic differentiation over Tensor<T>.
//
// A Tape records every operation applied to its Vars in creation order, which
// is a topological order of the graph. Backward() walks the tape once from
// the loss to the front and accumulates gradients in that fixed order, so
// gradients are reproducible bit-for-bit. A Tape is single-threaded; kernels
// inside an operation may use OpenMP.

#ifndef PENTOLAB_AUTODIFF_H_
#define PENTOLAB_AUTODIFF_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "pentolab/tensor.h"

namespace pentolab {

template <typename T>
class Tape;

template <typename T>
struct Var {
  Tape<T>* tape = nullptr;
  int id = -1;

  const Tensor<T>& value() const;
  const Shape& shape() const { return value().shape(); }
  int dim(int axis) const { return value().dim(axis); }
};

template <typename T>
class Tape {
 public:
  using Backward = std::function<void(const Tensor<T>& grad_out)>;

  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  // Input that receives a gradient.
  Var<T> Leaf(Tensor<T> value);
  // Input without a gradient.
  Var<T> Constant(Tensor<T> value);
  // Result of an operation. `backward` is only kept when requires_grad.
  Var<T> Record(Tensor<T> value, bool requires_grad, Backward backward);

  const Tensor<T>& value(Var<T> v) const { return nodes_[std::size_t(v.id)].value; }
  bool requires_grad(Var<T> v) const { return nodes_[std::size_t(v.id)].requires_grad; }

  // Gradient buffer of `v`, allocated as zeros on first use.
  Tensor<T>& GradBuffer(Var<T> v);
  // Gradient after Backward(); zeros if nothing flowed into `v`.
  Tensor<T> Grad(Var<T> v) const;

  // Seeds d loss / d loss = 1 and runs every recorded backward closure that
  // received a gradient, newest first. `loss` must hold one element.
  void RunBackward(Var<T> loss);

  std::size_t size() const { return nodes_.size(); }

  // Non-smooth ops (ReLU) fold their branch pattern into a signature when
  // tracking is on; gradient checks use it to detect kink crossings.
  void set_track_kinks(bool on) { track_kinks_ = on; }
  bool track_kinks() const { return track_kinks_; }
  void MixKinks(std::uint64_t h) { kink_signature_ = (kink_signature_ ^ h) * 0x100000001b3ULL; }
  std::uint64_t kink_signature() const { return kink_signature_; }

 private:
  struct Node {
    Tensor<T> value;
    Tensor<T> grad;
    bool requires_grad = false;
    Backward backward;
  };
  std::vector<Node> nodes_;
  bool track_kinks_ = false;
  std::uint64_t kink_signature_ = 0xcbf29ce484222325ULL;
};

template <typename T>
const Tensor<T>& Var<T>::value() const {
  return tape->value(*this);
}

namespace ad {

// Elementwise with numpy-style broadcasting.
template <typename T>
Var<T> Add(Var<T> a, Var<T> b);
template <typename T>
Var<T> Sub(Var<T> a, Var<T> b);
template <typename T>
Var<T> Mul(Var<T> a, Var<T> b);
template <typename T>
Var<T> Div(Var<T> a, Var<T> b);
template <typename T>
Var<T> AddScalar(Var<T> a, T c);
template <typename T>
Var<T> Scale(Var<T> a, T c);

template <typename T>
Var<T> Relu(Var<T> a);
template <typename T>
Var<T> Sigmoid(Var<T> a);
template <typename T>
Var<T> Tanh(Var<T> a);
template <typename T>
Var<T> Exp(Var<T> a);
template <typename T>
Var<T> Square(Var<T> a);
template <typename T>
Var<T> Reciprocal(Var<T> a);

// a [m, k] x b [k, n].
template <typename T>
Var<T> MatMul(Var<T> a, Var<T> b);
// x [..., in] x w [in, out] + bias [out]; bias may be a default Var.
template <typename T>
Var<T> Linear(Var<T> x, Var<T> w, Var<T> bias);

// x [N, C, H, W], w [O, C, kh, kw], bias [O].
template <typename T>
Var<T> Conv2d(Var<T> x, Var<T> w, Var<T> bias, int stride, int pad);
// x [N, C, H, W], w [C, O, kh, kw], bias [O]; H' = (H - 1) * stride - 2 * pad + kh.
template <typename T>
Var<T> ConvTranspose2d(Var<T> x, Var<T> w, Var<T> bias, int stride, int pad);

// Reductions accumulate in double.
template <typename T>
Var<T> Sum(Var<T> a);
template <typename T>
Var<T> Mean(Var<T> a);
template <typename T>
Var<T> SumAxis(Var<T> a, int axis, bool keepdim);
template <typename T>
Var<T> MeanAxis(Var<T> a, int axis, bool keepdim);

template <typename T>
Var<T> Softmax(Var<T> a, int axis);
// Normalizes over the last axis, then gamma * x_hat + beta.
template <typename T>
Var<T> LayerNorm(Var<T> x, Var<T> gamma, Var<T> beta, T eps = T(1e-5));

template <typename T>
Var<T> Reshape(Var<T> a, Shape shape);
template <typename T>
Var<T> Permute(Var<T> a, std::vector<int> perm);
template <typename T>
Var<T> Slice(Var<T> a, int axis, int start, int length);

// Mean over all elements of (pred - target)^2; target is not differentiated.
template <typename T>
Var<T> MseLoss(Var<T> pred, Var<T> target);

// Gated recurrent unit with packed gate weights (reset, update, candidate):
// wx [in, 3H], wh [H, 3H], bx [3H], bh [3H].
//   r = sigmoid(x wx_r + bx_r + h wh_r + bh_r)
//   z = sigmoid(x wx_z + bx_z + h wh_z + bh_z)
//   n = tanh(x wx_n + bx_n + r * (h wh_n + bh_n))
//   h' = (1 - z) * n + z * h
template <typename T>
Var<T> GruCell(Var<T> x, Var<T> h, Var<T> wx, Var<T> wh, Var<T> bx, Var<T> bh);

}  // namespace ad

// Broadcast result shape (numpy rules); throws ShapeMismatch.
Shape BroadcastShape(const Shape& a, const Shape& b);

}  // namespace pentolab

#endif  // PENTOLAB_AUTODIFF_H_

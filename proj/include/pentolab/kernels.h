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

// Numeric kernels behind the autodiff ops. The kernels:: functions are the
// OpenMP-parallel production path (im2col + BLAS); reference:: keeps direct
// serial formulations used as test oracles and benchmark baselines.

#ifndef PENTOLAB_KERNELS_H_
#define PENTOLAB_KERNELS_H_

#include <cstddef>

#include "pentolab/tensor.h"

namespace pentolab {

// Shapes of a 2-D convolution read as "input N x C x H x W, kernel kh x kw".
struct ConvGeometry {
  int n = 0, c = 0, h = 0, w = 0;
  int kh = 0, kw = 0;
  int stride = 1, pad = 0;
  int ho = 0, wo = 0;

  static ConvGeometry For(int n, int c, int h, int w, int kh, int kw, int stride, int pad);
  std::size_t patch() const { return std::size_t(c) * kh * kw; }
  std::size_t out_plane() const { return std::size_t(ho) * wo; }
  std::size_t columns() const { return std::size_t(n) * out_plane(); }
};

namespace kernels {

// Row-major C = alpha * op(A) * op(B) + beta * C.
template <typename T>
void Gemm(bool trans_a, bool trans_b, int m, int n, int k, T alpha, const T* a, const T* b, T beta,
          T* c);

// cols is [C*kh*kw, N*Ho*Wo]; column n*Ho*Wo + p holds the patch of output
// pixel p of sample n. Zero padding.
template <typename T>
void Im2Col(const T* x, const ConvGeometry& g, T* cols);

// Adjoint of Im2Col: accumulates cols back into x (x is not cleared).
template <typename T>
void Col2Im(const T* cols, const ConvGeometry& g, T* x);

// [N, C, P] <-> [C, N*P] transposes used around the GEMMs.
template <typename T>
void NcpToCnp(const T* src, int n, int c, std::size_t p, T* dst);
template <typename T>
void CnpToNcp(const T* src, int n, int c, std::size_t p, T* dst);

}  // namespace kernels

namespace reference {

template <typename T>
void MatMul(const T* a, const T* b, int m, int k, int n, T* c);

// Direct convolution: x [N, C, H, W], w [O, C, kh, kw], bias [O] or empty.
template <typename T>
Tensor<T> Conv2d(const Tensor<T>& x, const Tensor<T>& w, const Tensor<T>& bias, int stride,
                 int pad);

// Direct scatter form of the transposed convolution: x [N, C, H, W],
// w [C, O, kh, kw], output H' = (H - 1) * stride - 2 * pad + kh.
template <typename T>
Tensor<T> ConvTranspose2d(const Tensor<T>& x, const Tensor<T>& w, const Tensor<T>& bias, int stride,
                          int pad);

}  // namespace reference
}  // namespace pentolab

#endif  // PENTOLAB_KERNELS_H_

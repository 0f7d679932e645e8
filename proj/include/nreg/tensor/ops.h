// Copyright 2026 The nreg Authors.
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

// Differentiable operations. Every function records one node on the tape of
// its first argument and returns the result handle.
//
// There is no implicit broadcasting. The only shape-mixing rule is
// AddRowwise, which adds a vector to every row of a matrix.

#ifndef NREG_TENSOR_OPS_H_
#define NREG_TENSOR_OPS_H_

#include <vector>

#include "nreg/tensor/rng.h"
#include "nreg/tensor/tape.h"

namespace nreg {

enum class Elementwise { kAdd, kSub, kMul, kTanh, kSigmoid };

// [m x k] * [k x n] -> [m x n]; [m x k] * [k] -> [m].
template <typename T>
Var<T> MatMul(Var<T> a, Var<T> b);

// Unary ops ignore `b`; binary ops require equal shapes.
template <typename T>
Var<T> Apply(Elementwise op, Var<T> a, Var<T> b = {});

template <typename T>
Var<T> Add(Var<T> a, Var<T> b) { return Apply(Elementwise::kAdd, a, b); }
template <typename T>
Var<T> Sub(Var<T> a, Var<T> b) { return Apply(Elementwise::kSub, a, b); }
template <typename T>
Var<T> Mul(Var<T> a, Var<T> b) { return Apply(Elementwise::kMul, a, b); }
template <typename T>
Var<T> Tanh(Var<T> a) { return Apply(Elementwise::kTanh, a); }
template <typename T>
Var<T> Sigmoid(Var<T> a) { return Apply(Elementwise::kSigmoid, a); }

// [n x d] + [d] -> [n x d], the vector added to every row.
template <typename T>
Var<T> AddRowwise(Var<T> m, Var<T> v);

// Multiplies by a constant.
template <typename T>
Var<T> Scale(Var<T> a, T factor);

// Softmax of a vector, with max subtraction.
template <typename T>
Var<T> Softmax(Var<T> v);

// -log softmax(logits)[target], via log-sum-exp. Result has shape {1}.
template <typename T>
Var<T> PickNegLogSoftmax(Var<T> logits, int target);

// Concatenation along `axis`. Vectors only have axis 0; matrices 0 or 1.
template <typename T>
Var<T> Concat(const std::vector<Var<T>> &parts, int axis = 0);

// Stacks equal-length vectors as the rows of a matrix.
template <typename T>
Var<T> StackRows(const std::vector<Var<T>> &rows);

template <typename T>
Var<T> Transpose(Var<T> m);

// Contiguous sub-vector [offset, offset + length).
template <typename T>
Var<T> Slice(Var<T> v, int offset, int length);

// Row `index` of an embedding matrix, as a vector. Backward touches that row
// only. Throws VocabularyError for an out-of-range index.
template <typename T>
Var<T> Lookup(Var<T> table, int index);

// Inverted dropout: in training mode zeroes each element with probability p
// and scales survivors by 1 / (1 - p); identity otherwise.
template <typename T>
Var<T> Dropout(Var<T> a, double p, bool training, Rng &rng);

// Sum of all elements, shape {1}.
template <typename T>
Var<T> Sum(Var<T> a);

// Column means of an [n x d] matrix -> [d].
template <typename T>
Var<T> MeanRows(Var<T> m);

}  // namespace nreg

#endif  // NREG_TENSOR_OPS_H_

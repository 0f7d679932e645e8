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

#ifndef NREG_TENSOR_TENSOR_H_
#define NREG_TENSOR_TENSOR_H_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nreg/error.h"

namespace nreg {

using Shape = std::vector<int>;

// Renders a shape as "[2x3]".
std::string ShapeString(const Shape &shape);

// Number of elements of a shape. Throws DimensionError on non-positive dims.
std::size_t ShapeSize(const Shape &shape);

// Dense row-major tensor with a lazily allocated gradient buffer of the same
// shape. Rank 0 is not used; scalars are shape {1}.
template <typename T>
class Tensor {
 public:
  using value_type = T;

  Tensor() = default;

  // Zero-filled tensor.
  explicit Tensor(Shape shape)
      : shape_(std::move(shape)), values_(ShapeSize(shape_), T(0)) {}

  Tensor(Shape shape, std::vector<T> values)
      : shape_(std::move(shape)), values_(std::move(values)) {
    if (ShapeSize(shape_) != values_.size()) {
      throw DimensionError("tensor of shape " + ShapeString(shape_) +
                           " cannot hold " + std::to_string(values_.size()) +
                           " values");
    }
  }

  static Tensor Vector(std::vector<T> values) {
    Shape shape{static_cast<int>(values.size())};
    return Tensor(std::move(shape), std::move(values));
  }

  static Tensor Matrix(int rows, int cols, std::vector<T> values) {
    return Tensor(Shape{rows, cols}, std::move(values));
  }

  const Shape &shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  // Rows/cols of a matrix; a vector counts as a single column.
  int rows() const { return shape_.empty() ? 0 : shape_[0]; }
  int cols() const { return rank() < 2 ? 1 : shape_[1]; }

  std::span<T> values() { return values_; }
  std::span<const T> values() const { return values_; }
  T *data() { return values_.data(); }
  const T *data() const { return values_.data(); }

  T &operator[](std::size_t i) { return values_[i]; }
  const T &operator[](std::size_t i) const { return values_[i]; }
  T &at(int r, int c) { return values_[static_cast<std::size_t>(r) * cols() + c]; }
  const T &at(int r, int c) const {
    return values_[static_cast<std::size_t>(r) * cols() + c];
  }

  bool has_grad() const { return !grad_.empty(); }
  std::span<T> grad() {
    ensure_grad();
    return grad_;
  }
  std::span<const T> grad() const { return grad_; }
  void ensure_grad() {
    if (grad_.size() != values_.size()) grad_.assign(values_.size(), T(0));
  }
  void zero_grad() {
    if (!grad_.empty()) std::fill(grad_.begin(), grad_.end(), T(0));
  }
  void release_grad() { std::vector<T>().swap(grad_); }

  // True when every value is finite.
  bool finite() const;

  void fill(T v) { std::fill(values_.begin(), values_.end(), v); }

 private:
  Shape shape_;
  std::vector<T> values_;
  std::vector<T> grad_;
};

extern template class Tensor<float>;
extern template class Tensor<double>;

}  // namespace nreg

#endif  // NREG_TENSOR_TENSOR_H_

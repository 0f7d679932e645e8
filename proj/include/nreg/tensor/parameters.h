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

#ifndef NREG_TENSOR_PARAMETERS_H_
#define NREG_TENSOR_PARAMETERS_H_

#include <deque>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nreg/tensor/rng.h"
#include "nreg/tensor/tensor.h"

namespace nreg {

// Named trainable tensors in insertion order. Element addresses are stable
// for the lifetime of the set.
template <typename T>
class ParameterSet {
 public:
  struct Entry {
    std::string name;
    Tensor<T> tensor;
  };

  ParameterSet() = default;
  ParameterSet(const ParameterSet &other);
  ParameterSet &operator=(const ParameterSet &other);
  ParameterSet(ParameterSet &&) = default;
  ParameterSet &operator=(ParameterSet &&) = default;

  // Throws ContractError on a duplicate name.
  Tensor<T> &Add(std::string name, Tensor<T> init);

  // Throws ContractError on an unknown name.
  Tensor<T> &Get(std::string_view name);
  const Tensor<T> &Get(std::string_view name) const;
  bool Contains(std::string_view name) const;

  std::size_t size() const { return entries_.size(); }
  Entry &entry(std::size_t i) { return entries_[i]; }
  const Entry &entry(std::size_t i) const { return entries_[i]; }

  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  void ZeroGrad();

  // Total number of scalar values.
  std::size_t NumValues() const;

  // Copies values (not gradients) from a set with identical names/shapes.
  void CopyValuesFrom(const ParameterSet &other);

 private:
  void Reindex();

  std::deque<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Uniform in +-sqrt(6 / (rows + cols)).
template <typename T>
Tensor<T> GlorotInit(int rows, int cols, Rng &rng);

// Decaying averages of squared gradients and squared updates, one pair per
// parameter, in ParameterSet order.
template <typename T>
struct AdadeltaState {
  double rho = 0.95;
  double eps = 1e-6;
  std::vector<std::vector<T>> sq_grad;
  std::vector<std::vector<T>> sq_update;

  // Zeroed accumulators shaped like `params`.
  static AdadeltaState For(const ParameterSet<T> &params, double rho = 0.95,
                           double eps = 1e-6);
};

// One Adadelta update of a single tensor:
//   E[g^2] <- rho E[g^2] + (1 - rho) g^2
//   dx     <- -sqrt(E[dx^2] + eps) / sqrt(E[g^2] + eps) * g
//   E[dx^2] <- rho E[dx^2] + (1 - rho) dx^2
//   x      <- x + dx
template <typename T>
void AdadeltaUpdate(std::span<T> x, std::span<const T> g, std::span<T> sq_grad,
                    std::span<T> sq_update, double rho, double eps);

// Applies AdadeltaUpdate to every parameter using its grad buffer. Parameters
// without an allocated gradient count as zero gradient.
template <typename T>
void AdadeltaStep(ParameterSet<T> &params, AdadeltaState<T> &state);

// Rescales all gradients so that their global L2 norm is at most max_norm.
// Returns the norm before clipping.
template <typename T>
double ClipGradNorm(ParameterSet<T> &params, double max_norm);

// "NREG1" container: magic, u32 header length, header bytes, u32 record
// count, then per record u32 name length, name, u32 rank, u32 dims[rank] and
// little-endian float32 values.
template <typename T>
void WriteParameters(std::ostream &out, const ParameterSet<T> &params,
                     std::string_view header = {});

// Reads a container written by WriteParameters. Returns the header; values are
// converted to T.
template <typename T>
std::string ReadParameters(std::istream &in, ParameterSet<T> &params);

extern template class ParameterSet<float>;
extern template class ParameterSet<double>;

}  // namespace nreg

#endif  // NREG_TENSOR_PARAMETERS_H_

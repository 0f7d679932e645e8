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

#include "nreg/tensor/tape.h"

#include <string>

namespace nreg {

template <typename T>
Var<T> Tape<T>::Constant(Tensor<T> value) {
  if (!value.finite()) throw NumericError("non-finite constant");
  Node &n = nodes_.emplace_back();
  n.owned = std::move(value);
  return {this, static_cast<int>(nodes_.size() - 1)};
}

template <typename T>
Var<T> Tape<T>::Param(Tensor<T> &param) {
  auto it = param_ids_.find(&param);
  if (it != param_ids_.end()) return {this, it->second};
  Node &n = nodes_.emplace_back();
  n.external = &param;
  n.needs_grad = recording_;
  int id = static_cast<int>(nodes_.size() - 1);
  param_ids_.emplace(&param, id);
  return {this, id};
}

template <typename T>
Var<T> Tape<T>::Record(const char *op, Tensor<T> value, std::vector<int> inputs,
                       BackwardFn backward) {
  if (!value.finite()) {
    throw NumericError(std::string("non-finite output from ") + op);
  }
  Node &n = nodes_.emplace_back();
  n.owned = std::move(value);
  if (recording_) {
    for (int i : inputs) {
      if (nodes_[i].needs_grad) n.needs_grad = true;
    }
    if (n.needs_grad) {
      n.inputs = std::move(inputs);
      n.backward = std::move(backward);
    }
  }
  return {this, static_cast<int>(nodes_.size() - 1)};
}

template <typename T>
void Tape<T>::Backward(Var<T> loss) {
  if (loss.tape != this) throw ContractError("loss belongs to another tape");
  if (!recording_) throw ContractError("backward on a non-recording tape");
  if (value(loss.id).size() != 1) {
    throw ContractError("backward needs a scalar loss, got shape " +
                        ShapeString(value(loss.id).shape()));
  }
  // Every bound parameter gets a gradient buffer, reached or not.
  for (auto &[param, id] : param_ids_) tensor(id).ensure_grad();
  if (!nodes_[loss.id].needs_grad) return;
  grad(loss.id)[0] += T(1);
  for (int id = loss.id; id >= 0; --id) {
    Node &n = nodes_[id];
    if (!n.backward) continue;
    if (!tensor(id).has_grad()) continue;  // not on a path from the loss
    n.backward(*this, id);
  }
}

template class Tape<float>;
template class Tape<double>;

}  // namespace nreg

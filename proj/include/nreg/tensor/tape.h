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

#ifndef NREG_TENSOR_TAPE_H_
#define NREG_TENSOR_TAPE_H_

#include <deque>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "nreg/tensor/tensor.h"

namespace nreg {

template <typename T>
class Tape;

// Handle to a node on a tape. Cheap to copy; valid while the tape lives.
template <typename T>
struct Var {
  Tape<T> *tape = nullptr;
  int id = -1;

  bool valid() const { return tape != nullptr && id >= 0; }
  const Tensor<T> &value() const { return tape->value(id); }
  const Shape &shape() const { return value().shape(); }
  std::size_t size() const { return value().size(); }
};

// Records operations in execution order; Backward is a single reverse sweep. Node inputs always precede the node itself.
//
// Trainable tensors enter the tape through Param(); their gradients are
// accumulated directly into the external tensor's grad buffer, so several
// tapes can contribute to one parameter set before an optimizer step.
template <typename T>
class Tape {
 public:
  // Backward rule for one node: reads the node's output gradient and adds
  // into the gradients of its inputs.
  using BackwardFn = std::function<void(Tape &, int)>;

  // With recording disabled no backward rules are kept (inference).
  explicit Tape(bool recording = true) : recording_(recording) {}

  Tape(const Tape &) = delete;
  Tape &operator=(const Tape &) = delete;

  bool recording() const { return recording_; }
  std::size_t size() const { return nodes_.size(); }

  Var<T> Constant(Tensor<T> value);

  // Binds an external tensor. Repeated calls return the same node.
  Var<T> Param(Tensor<T> &param);

  // Appends an op result. Throws NumericError if `value` is not finite.
  Var<T> Record(const char *op, Tensor<T> value, std::vector<int> inputs,
                BackwardFn backward);

  const Tensor<T> &value(int id) const { return tensor(id); }

  // Gradient buffer of a node, allocated (zeroed) on first access.
  std::span<T> grad(int id) { return tensor(id).grad(); }

  bool needs_grad(int id) const { return nodes_[id].needs_grad; }

  // Seeds d(loss)/d(loss) = 1 and runs every recorded backward rule once,
  // in reverse order. The loss must be a single element.
  void Backward(Var<T> loss);

 private:
  struct Node {
    Tensor<T> owned;
    Tensor<T> *external = nullptr;
    std::vector<int> inputs;
    BackwardFn backward;
    bool needs_grad = false;
  };

  Tensor<T> &tensor(int id) {
    Node &n = nodes_[id];
    return n.external != nullptr ? *n.external : n.owned;
  }
  const Tensor<T> &tensor(int id) const {
    const Node &n = nodes_[id];
    return n.external != nullptr ? *n.external : n.owned;
  }

  bool recording_;
  std::deque<Node> nodes_;
  std::unordered_map<const Tensor<T> *, int> param_ids_;
};

extern template class Tape<float>;
extern template class Tape<double>;

}  // namespace nreg

#endif  // NREG_TENSOR_TAPE_H_

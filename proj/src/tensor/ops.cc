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

#include "nreg/tensor/ops.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace nreg {
namespace {

template <typename T>
void CheckSameTape(Var<T> a, Var<T> b) {
  if (!a.valid() || !b.valid() || a.tape != b.tape) {
    throw ContractError("operands must be valid handles on the same tape");
  }
}

template <typename T>
T StableSigmoid(T x) {
  if (x >= T(0)) return T(1) / (T(1) + std::exp(-x));
  T e = std::exp(x);
  return e / (T(1) + e);
}

}  // namespace

template <typename T>
Var<T> MatMul(Var<T> a, Var<T> b) {
  CheckSameTape(a, b);
  const Tensor<T> &A = a.value();
  const Tensor<T> &B = b.value();
  if (A.rank() != 2 || B.rank() > 2 || A.cols() != B.rows()) {
    throw DimensionError("matmul of " + ShapeString(A.shape()) + " and " +
                         ShapeString(B.shape()));
  }
  const int m = A.rows(), k = A.cols(), n = B.cols();
  Tensor<T> C(B.rank() == 1 ? Shape{m} : Shape{m, n});
  const T *pa = A.data();
  const T *pb = B.data();
  T *pc = C.data();
  for (int i = 0; i < m; ++i) {
    T *crow = pc + static_cast<std::size_t>(i) * n;
    const T *arow = pa + static_cast<std::size_t>(i) * k;
    for (int p = 0; p < k; ++p) {
      const T av = arow[p];
      const T *brow = pb + static_cast<std::size_t>(p) * n;
      for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
  const int ia = a.id, ib = b.id;
  return a.tape->Record(
      "matmul", std::move(C), {ia, ib}, [ia, ib, m, k, n](Tape<T> &tape, int self) {
        const T *g = tape.value(self).grad().data();
        const T *pa = tape.value(ia).data();
        const T *pb = tape.value(ib).data();
        if (tape.needs_grad(ia)) {
          T *ga = tape.grad(ia).data();
          for (int i = 0; i < m; ++i) {
            const T *grow = g + static_cast<std::size_t>(i) * n;
            T *garow = ga + static_cast<std::size_t>(i) * k;
            for (int p = 0; p < k; ++p) {
              const T *brow = pb + static_cast<std::size_t>(p) * n;
              T acc = 0;
              for (int j = 0; j < n; ++j) acc += grow[j] * brow[j];
              garow[p] += acc;
            }
          }
        }
        if (tape.needs_grad(ib)) {
          T *gb = tape.grad(ib).data();
          for (int i = 0; i < m; ++i) {
            const T *grow = g + static_cast<std::size_t>(i) * n;
            const T *arow = pa + static_cast<std::size_t>(i) * k;
            for (int p = 0; p < k; ++p) {
              const T av = arow[p];
              if (av == T(0)) continue;
              T *gbrow = gb + static_cast<std::size_t>(p) * n;
              for (int j = 0; j < n; ++j) gbrow[j] += av * grow[j];
            }
          }
        }
      });
}

template <typename T>
Var<T> Apply(Elementwise op, Var<T> a, Var<T> b) {
  const bool binary =
      op == Elementwise::kAdd || op == Elementwise::kSub || op == Elementwise::kMul;
  if (!a.valid()) throw ContractError("invalid operand");
  const Tensor<T> &A = a.value();
  if (binary) {
    CheckSameTape(a, b);
    if (A.shape() != b.shape()) {
      throw DimensionError("elementwise op on " + ShapeString(A.shape()) + " and " +
                           ShapeString(b.shape()));
    }
  }
  Tensor<T> out(A.shape());
  const std::size_t n = A.size();
  const T *x = A.data();
  T *y = out.data();
  switch (op) {
    case Elementwise::kAdd: {
      const T *z = b.value().data();
      for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + z[i];
      break;
    }
    case Elementwise::kSub: {
      const T *z = b.value().data();
      for (std::size_t i = 0; i < n; ++i) y[i] = x[i] - z[i];
      break;
    }
    case Elementwise::kMul: {
      const T *z = b.value().data();
      for (std::size_t i = 0; i < n; ++i) y[i] = x[i] * z[i];
      break;
    }
    case Elementwise::kTanh:
      for (std::size_t i = 0; i < n; ++i) y[i] = std::tanh(x[i]);
      break;
    case Elementwise::kSigmoid:
      for (std::size_t i = 0; i < n; ++i) y[i] = StableSigmoid(x[i]);
      break;
  }
  const int ia = a.id;
  const int ib = binary ? b.id : -1;
  std::vector<int> inputs{ia};
  if (binary) inputs.push_back(ib);
  static constexpr const char *kNames[] = {"add", "sub", "mul", "tanh", "sigmoid"};
  return a.tape->Record(
      kNames[static_cast<int>(op)], std::move(out), std::move(inputs),
      [op, ia, ib, n](Tape<T> &tape, int self) {
        const T *g = tape.value(self).grad().data();
        const T *y = tape.value(self).data();
        switch (op) {
          case Elementwise::kAdd:
          case Elementwise::kSub: {
            if (tape.needs_grad(ia)) {
              T *ga = tape.grad(ia).data();
              for (std::size_t i = 0; i < n; ++i) ga[i] += g[i];
            }
            if (tape.needs_grad(ib)) {
              T *gb = tape.grad(ib).data();
              const T sign = op == Elementwise::kAdd ? T(1) : T(-1);
              for (std::size_t i = 0; i < n; ++i) gb[i] += sign * g[i];
            }
            break;
          }
          case Elementwise::kMul: {
            const T *x = tape.value(ia).data();
            const T *z = tape.value(ib).data();
            if (tape.needs_grad(ia)) {
              T *ga = tape.grad(ia).data();
              for (std::size_t i = 0; i < n; ++i) ga[i] += g[i] * z[i];
            }
            if (tape.needs_grad(ib)) {
              T *gb = tape.grad(ib).data();
              for (std::size_t i = 0; i < n; ++i) gb[i] += g[i] * x[i];
            }
            break;
          }
          case Elementwise::kTanh: {
            T *ga = tape.grad(ia).data();
            for (std::size_t i = 0; i < n; ++i) ga[i] += g[i] * (T(1) - y[i] * y[i]);
            break;
          }
          case Elementwise::kSigmoid: {
            T *ga = tape.grad(ia).data();
            for (std::size_t i = 0; i < n; ++i) ga[i] += g[i] * y[i] * (T(1) - y[i]);
            break;
          }
        }
      });
}

template <typename T>
Var<T> AddRowwise(Var<T> m, Var<T> v) {
  CheckSameTape(m, v);
  const Tensor<T> &M = m.value();
  const Tensor<T> &V = v.value();
  if (M.rank() != 2 || V.rank() != 1 || V.size() != static_cast<std::size_t>(M.cols())) {
    throw DimensionError("row-wise add of " + ShapeString(V.shape()) + " to " +
                         ShapeString(M.shape()));
  }
  const int rows = M.rows(), cols = M.cols();
  Tensor<T> out(M.shape());
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) out.at(r, c) = M.at(r, c) + V[c];
  }
  const int im = m.id, iv = v.id;
  return m.tape->Record("add_rowwise", std::move(out), {im, iv},
                        [im, iv, rows, cols](Tape<T> &tape, int self) {
                          const T *g = tape.value(self).grad().data();
                          if (tape.needs_grad(im)) {
                            T *gm = tape.grad(im).data();
                            for (int i = 0; i < rows * cols; ++i) gm[i] += g[i];
                          }
                          if (tape.needs_grad(iv)) {
                            T *gv = tape.grad(iv).data();
                            for (int r = 0; r < rows; ++r) {
                              for (int c = 0; c < cols; ++c) gv[c] += g[r * cols + c];
                            }
                          }
                        });
}

template <typename T>
Var<T> Scale(Var<T> a, T factor) {
  if (!a.valid()) throw ContractError("invalid operand");
  Tensor<T> out(a.shape());
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = a.value()[i] * factor;
  const int ia = a.id;
  return a.tape->Record("scale", std::move(out), {ia},
                        [ia, n, factor](Tape<T> &tape, int self) {
                          const T *g = tape.value(self).grad().data();
                          T *ga = tape.grad(ia).data();
                          for (std::size_t i = 0; i < n; ++i) ga[i] += g[i] * factor;
                        });
}

template <typename T>
Var<T> Softmax(Var<T> v) {
  if (!v.valid()) throw ContractError("invalid operand");
  const Tensor<T> &x = v.value();
  if (x.rank() != 1 || x.size() == 0) {
    throw DimensionError("softmax needs a non-empty vector, got " + ShapeString(x.shape()));
  }
  const std::size_t n = x.size();
  Tensor<T> y(x.shape());
  T mx = *std::max_element(x.values().begin(), x.values().end());
  T total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = std::exp(x[i] - mx);
    total += y[i];
  }
  for (std::size_t i = 0; i < n; ++i) y[i] /= total;
  const int iv = v.id;
  return v.tape->Record("softmax", std::move(y), {iv}, [iv, n](Tape<T> &tape, int self) {
    const T *g = tape.value(self).grad().data();
    const T *y = tape.value(self).data();
    T dot = 0;
    for (std::size_t i = 0; i < n; ++i) dot += g[i] * y[i];
    T *gv = tape.grad(iv).data();
    for (std::size_t i = 0; i < n; ++i) gv[i] += y[i] * (g[i] - dot);
  });
}

template <typename T>
Var<T> PickNegLogSoftmax(Var<T> logits, int target) {
  if (!logits.valid()) throw ContractError("invalid operand");
  const Tensor<T> &x = logits.value();
  if (x.rank() != 1 || x.size() == 0) {
    throw DimensionError("log-softmax needs a non-empty vector, got " +
                         ShapeString(x.shape()));
  }
  const std::size_t n = x.size();
  if (target < 0 || static_cast<std::size_t>(target) >= n) {
    throw VocabularyError("target index " + std::to_string(target) +
                          " outside output of size " + std::to_string(n));
  }
  T mx = *std::max_element(x.values().begin(), x.values().end());
  T total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::exp(x[i] - mx);
  const T lse = mx + std::log(total);
  Tensor<T> out(Shape{1}, {lse - x[target]});
  const int il = logits.id;
  return logits.tape->Record(
      "neg_log_softmax", std::move(out), {il}, [il, n, target, lse](Tape<T> &tape, int self) {
        const T g = tape.value(self).grad()[0];
        const T *x = tape.value(il).data();
        T *gl = tape.grad(il).data();
        for (std::size_t i = 0; i < n; ++i) gl[i] += g * std::exp(x[i] - lse);
        gl[target] -= g;
      });
}

template <typename T>
Var<T> Concat(const std::vector<Var<T>> &parts, int axis) {
  if (parts.empty()) throw DimensionError("concat of zero tensors");
  Tape<T> *tape = parts[0].tape;
  const int rank = parts[0].value().rank();
  if (axis < 0 || axis >= rank) {
    throw DimensionError("concat axis " + std::to_string(axis) + " on rank " +
                         std::to_string(rank));
  }
  std::vector<int> ids;
  std::vector<Shape> shapes;
  int total = 0;
  for (const auto &p : parts) {
    if (!p.valid() || p.tape != tape) throw ContractError("concat across tapes");
    const Shape &s = p.shape();
    if (static_cast<int>(s.size()) != rank) {
      throw DimensionError("concat of " + ShapeString(parts[0].shape()) + " and " +
                           ShapeString(s));
    }
    for (int d = 0; d < rank; ++d) {
      if (d != axis && s[d] != parts[0].shape()[d]) {
        throw DimensionError("concat of " + ShapeString(parts[0].shape()) + " and " +
                             ShapeString(s) + " along axis " + std::to_string(axis));
      }
    }
    total += s[axis];
    ids.push_back(p.id);
    shapes.push_back(s);
  }
  Shape out_shape = parts[0].shape();
  out_shape[axis] = total;
  Tensor<T> out(out_shape);
  // Copy as (outer, block) segments; for axis 0 there is one outer slice.
  const int outer = axis == 0 ? 1 : out_shape[0];
  const int out_row = axis == 0 ? static_cast<int>(out.size()) : out_shape[1];
  int offset = 0;
  std::vector<int> offsets;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Tensor<T> &src = parts[k].value();
    const int block = static_cast<int>(src.size()) / outer;
    for (int r = 0; r < outer; ++r) {
      std::copy_n(src.data() + static_cast<std::size_t>(r) * block, block,
                  out.data() + static_cast<std::size_t>(r) * out_row + offset);
    }
    offsets.push_back(offset);
    offset += block;
  }
  return tape->Record("concat", std::move(out), ids,
                      [ids, offsets, outer, out_row](Tape<T> &tape, int self) {
                        const T *g = tape.value(self).grad().data();
                        for (std::size_t k = 0; k < ids.size(); ++k) {
                          if (!tape.needs_grad(ids[k])) continue;
                          std::span<T> gi = tape.grad(ids[k]);
                          const int block = static_cast<int>(gi.size()) / outer;
                          for (int r = 0; r < outer; ++r) {
                            const T *src =
                                g + static_cast<std::size_t>(r) * out_row + offsets[k];
                            T *dst = gi.data() + static_cast<std::size_t>(r) * block;
                            for (int j = 0; j < block; ++j) dst[j] += src[j];
                          }
                        }
                      });
}

template <typename T>
Var<T> StackRows(const std::vector<Var<T>> &rows) {
  if (rows.empty()) throw DimensionError("stack of zero rows");
  Tape<T> *tape = rows[0].tape;
  const Shape row_shape = rows[0].shape();
  if (row_shape.size() != 1) throw DimensionError("stack needs vectors");
  const int d = row_shape[0];
  const int n = static_cast<int>(rows.size());
  Tensor<T> out(Shape{n, d});
  std::vector<int> ids;
  for (int r = 0; r < n; ++r) {
    if (!rows[r].valid() || rows[r].tape != tape) throw ContractError("stack across tapes");
    if (rows[r].shape() != row_shape) {
      throw DimensionError("stack of " + ShapeString(row_shape) + " and " +
                           ShapeString(rows[r].shape()));
    }
    std::copy_n(rows[r].value().data(), d, out.data() + static_cast<std::size_t>(r) * d);
    ids.push_back(rows[r].id);
  }
  return tape->Record("stack_rows", std::move(out), ids, [ids, d](Tape<T> &tape, int self) {
    const T *g = tape.value(self).grad().data();
    for (std::size_t r = 0; r < ids.size(); ++r) {
      if (!tape.needs_grad(ids[r])) continue;
      T *gr = tape.grad(ids[r]).data();
      for (int j = 0; j < d; ++j) gr[j] += g[r * d + j];
    }
  });
}

template <typename T>
Var<T> Transpose(Var<T> m) {
  if (!m.valid()) throw ContractError("invalid operand");
  const Tensor<T> &M = m.value();
  if (M.rank() != 2) throw DimensionError("transpose of " + ShapeString(M.shape()));
  const int rows = M.rows(), cols = M.cols();
  Tensor<T> out(Shape{cols, rows});
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) out.at(c, r) = M.at(r, c);
  }
  const int im = m.id;
  return m.tape->Record("transpose", std::move(out), {im},
                        [im, rows, cols](Tape<T> &tape, int self) {
                          const T *g = tape.value(self).grad().data();
                          T *gm = tape.grad(im).data();
                          for (int r = 0; r < rows; ++r) {
                            for (int c = 0; c < cols; ++c) gm[r * cols + c] += g[c * rows + r];
                          }
                        });
}

template <typename T>
Var<T> Slice(Var<T> v, int offset, int length) {
  if (!v.valid()) throw ContractError("invalid operand");
  const Tensor<T> &x = v.value();
  if (x.rank() != 1 || offset < 0 || length <= 0 ||
      static_cast<std::size_t>(offset + length) > x.size()) {
    throw DimensionError("slice [" + std::to_string(offset) + ", +" +
                         std::to_string(length) + ") of " + ShapeString(x.shape()));
  }
  Tensor<T> out(Shape{length});
  std::copy_n(x.data() + offset, length, out.data());
  const int iv = v.id;
  return v.tape->Record("slice", std::move(out), {iv},
                        [iv, offset, length](Tape<T> &tape, int self) {
                          const T *g = tape.value(self).grad().data();
                          T *gv = tape.grad(iv).data() + offset;
                          for (int j = 0; j < length; ++j) gv[j] += g[j];
                        });
}

template <typename T>
Var<T> Lookup(Var<T> table, int index) {
  if (!table.valid()) throw ContractError("invalid operand");
  const Tensor<T> &V = table.value();
  if (V.rank() != 2) throw DimensionError("lookup table must be a matrix");
  if (index < 0 || index >= V.rows()) {
    throw VocabularyError("index " + std::to_string(index) + " outside vocabulary of " +
                          std::to_string(V.rows()));
  }
  const int d = V.cols();
  Tensor<T> out(Shape{d});
  std::copy_n(V.data() + static_cast<std::size_t>(index) * d, d, out.data());
  const int it = table.id;
  return table.tape->Record("lookup", std::move(out), {it},
                            [it, index, d](Tape<T> &tape, int self) {
                              const T *g = tape.value(self).grad().data();
                              T *gt = tape.grad(it).data() + static_cast<std::size_t>(index) * d;
                              for (int j = 0; j < d; ++j) gt[j] += g[j];
                            });
}

template <typename T>
Var<T> Dropout(Var<T> a, double p, bool training, Rng &rng) {
  if (!a.valid()) throw ContractError("invalid operand");
  if (!(p >= 0.0 && p < 1.0)) {
    throw ConfigError("dropout probability must be in [0, 1), got " + std::to_string(p));
  }
  if (!training || p == 0.0) return a;
  const std::size_t n = a.size();
  const T keep_scale = static_cast<T>(1.0 / (1.0 - p));
  std::vector<T> mask(n);
  Tensor<T> out(a.shape());
  for (std::size_t i = 0; i < n; ++i) {
    mask[i] = rng.Bernoulli(p) ? T(0) : keep_scale;
    out[i] = a.value()[i] * mask[i];
  }
  const int ia = a.id;
  return a.tape->Record("dropout", std::move(out), {ia},
                        [ia, mask = std::move(mask)](Tape<T> &tape, int self) {
                          const T *g = tape.value(self).grad().data();
                          T *ga = tape.grad(ia).data();
                          for (std::size_t i = 0; i < mask.size(); ++i) ga[i] += g[i] * mask[i];
                        });
}

template <typename T>
Var<T> Sum(Var<T> a) {
  if (!a.valid()) throw ContractError("invalid operand");
  T total = 0;
  for (T v : a.value().values()) total += v;
  const int ia = a.id;
  const std::size_t n = a.size();
  return a.tape->Record("sum", Tensor<T>(Shape{1}, {total}), {ia},
                        [ia, n](Tape<T> &tape, int self) {
                          const T g = tape.value(self).grad()[0];
                          T *ga = tape.grad(ia).data();
                          for (std::size_t i = 0; i < n; ++i) ga[i] += g;
                        });
}

template <typename T>
Var<T> MeanRows(Var<T> m) {
  if (!m.valid()) throw ContractError("invalid operand");
  const Tensor<T> &M = m.value();
  if (M.rank() != 2) throw DimensionError("mean over rows of " + ShapeString(M.shape()));
  const int rows = M.rows(), cols = M.cols();
  Tensor<T> out(Shape{cols});
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) out[c] += M.at(r, c);
  }
  for (int c = 0; c < cols; ++c) out[c] /= static_cast<T>(rows);
  const int im = m.id;
  return m.tape->Record("mean_rows", std::move(out), {im},
                        [im, rows, cols](Tape<T> &tape, int self) {
                          const T *g = tape.value(self).grad().data();
                          T *gm = tape.grad(im).data();
                          const T inv = T(1) / static_cast<T>(rows);
                          for (int r = 0; r < rows; ++r) {
                            for (int c = 0; c < cols; ++c) gm[r * cols + c] += g[c] * inv;
                          }
                        });
}

#define NREG_INSTANTIATE_OPS(T)                                               \
  template Var<T> MatMul(Var<T>, Var<T>);                                     \
  template Var<T> Apply(Elementwise, Var<T>, Var<T>);                         \
  template Var<T> AddRowwise(Var<T>, Var<T>);                                 \
  template Var<T> Scale(Var<T>, T);                                           \
  template Var<T> Softmax(Var<T>);                                            \
  template Var<T> PickNegLogSoftmax(Var<T>, int);                             \
  template Var<T> Concat(const std::vector<Var<T>> &, int);                   \
  template Var<T> StackRows(const std::vector<Var<T>> &);                     \
  template Var<T> Transpose(Var<T>);                                          \
  template Var<T> Slice(Var<T>, int, int);                                    \
  template Var<T> Lookup(Var<T>, int);                                        \
  template Var<T> Dropout(Var<T>, double, bool, Rng &);                       \
  template Var<T> Sum(Var<T>);                                                \
  template Var<T> MeanRows(Var<T>);

NREG_INSTANTIATE_OPS(float)
NREG_INSTANTIATE_OPS(double)

#undef NREG_INSTANTIATE_OPS

}  // namespace nreg

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

#include "nreg/tensor/parameters.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>

namespace nreg {

template <typename T>
ParameterSet<T>::ParameterSet(const ParameterSet &other) : entries_(other.entries_) {
  Reindex();
}

template <typename T>
ParameterSet<T> &ParameterSet<T>::operator=(const ParameterSet &other) {
  if (this != &other) {
    entries_ = other.entries_;
    Reindex();
  }
  return *this;
}

template <typename T>
void ParameterSet<T>::Reindex() {
  index_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].name, i);
}

template <typename T>
Tensor<T> &ParameterSet<T>::Add(std::string name, Tensor<T> init) {
  if (index_.count(name) != 0) throw ContractError("duplicate parameter " + name);
  index_.emplace(name, entries_.size());
  entries_.push_back({std::move(name), std::move(init)});
  return entries_.back().tensor;
}

template <typename T>
Tensor<T> &ParameterSet<T>::Get(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw ContractError("unknown parameter " + std::string(name));
  return entries_[it->second].tensor;
}

template <typename T>
const Tensor<T> &ParameterSet<T>::Get(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw ContractError("unknown parameter " + std::string(name));
  return entries_[it->second].tensor;
}

template <typename T>
bool ParameterSet<T>::Contains(std::string_view name) const {
  return index_.count(std::string(name)) != 0;
}

template <typename T>
void ParameterSet<T>::ZeroGrad() {
  for (auto &e : entries_) e.tensor.zero_grad();
}

template <typename T>
std::size_t ParameterSet<T>::NumValues() const {
  std::size_t n = 0;
  for (const auto &e : entries_) n += e.tensor.size();
  return n;
}

template <typename T>
void ParameterSet<T>::CopyValuesFrom(const ParameterSet &other) {
  if (other.size() != size()) throw DimensionError("parameter sets differ in size");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry &src = other.entries_[i];
    Entry &dst = entries_[i];
    if (src.name != dst.name || src.tensor.shape() != dst.tensor.shape()) {
      throw DimensionError("parameter " + dst.name + " does not match " + src.name);
    }
    std::copy(src.tensor.values().begin(), src.tensor.values().end(),
              dst.tensor.values().begin());
  }
}

template <typename T>
Tensor<T> GlorotInit(int rows, int cols, Rng &rng) {
  if (rows < 1 || cols < 1) {
    throw DimensionError("glorot init of " + ShapeString({rows, cols}));
  }
  const double bound = std::sqrt(6.0 / (rows + cols));
  Tensor<T> t(Shape{rows, cols});
  for (auto &v : t.values()) v = static_cast<T>(rng.Uniform(-bound, bound));
  return t;
}

template <typename T>
AdadeltaState<T> AdadeltaState<T>::For(const ParameterSet<T> &params, double rho,
                                       double eps) {
  if (!(rho > 0.0 && rho < 1.0) || !(eps > 0.0)) {
    throw ConfigError("adadelta needs 0 < rho < 1 and eps > 0");
  }
  AdadeltaState s;
  s.rho = rho;
  s.eps = eps;
  for (const auto &e : params) {
    s.sq_grad.emplace_back(e.tensor.size(), T(0));
    s.sq_update.emplace_back(e.tensor.size(), T(0));
  }
  return s;
}

template <typename T>
void AdadeltaUpdate(std::span<T> x, std::span<const T> g, std::span<T> sq_grad,
                    std::span<T> sq_update, double rho, double eps) {
  if (g.size() != x.size() || sq_grad.size() != x.size() || sq_update.size() != x.size()) {
    throw DimensionError("adadelta buffers disagree with parameter of size " +
                         std::to_string(x.size()));
  }
  const T r = static_cast<T>(rho), e = static_cast<T>(eps);
  for (std::size_t i = 0; i < x.size(); ++i) {
    sq_grad[i] = r * sq_grad[i] + (T(1) - r) * g[i] * g[i];
    const T dx = -std::sqrt(sq_update[i] + e) / std::sqrt(sq_grad[i] + e) * g[i];
    sq_update[i] = r * sq_update[i] + (T(1) - r) * dx * dx;
    x[i] += dx;
  }
}

template <typename T>
void AdadeltaStep(ParameterSet<T> &params, AdadeltaState<T> &state) {
  if (state.sq_grad.size() != params.size() || state.sq_update.size() != params.size()) {
    throw DimensionError("adadelta state does not match parameter set");
  }
  std::vector<T> zeros;
  for (std::size_t i = 0; i < params.size(); ++i) {
    Tensor<T> &t = params.entry(i).tensor;
    std::span<const T> g = t.grad();
    if (!t.has_grad()) {
      zeros.assign(t.size(), T(0));
      g = zeros;
    }
    AdadeltaUpdate<T>(t.values(), g, state.sq_grad[i], state.sq_update[i], state.rho,
                      state.eps);
  }
}

template <typename T>
double ClipGradNorm(ParameterSet<T> &params, double max_norm) {
  double sq = 0.0;
  for (const auto &e : params) {
    for (T g : e.tensor.grad()) sq += static_cast<double>(g) * g;
  }
  const double norm = std::sqrt(sq);
  if (max_norm > 0.0 && norm > max_norm) {
    const T scale = static_cast<T>(max_norm / norm);
    for (auto &e : params) {
      if (!e.tensor.has_grad()) continue;
      for (T &g : e.tensor.grad()) g *= scale;
    }
  }
  return norm;
}

namespace {

constexpr char kMagic[5] = {'N', 'R', 'E', 'G', '1'};

void PutU32(std::ostream &out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

std::uint32_t GetU32(std::istream &in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char *>(b), 4)) throw FormatError("truncated parameter file");
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::string GetBytes(std::istream &in, std::uint32_t n) {
  std::string s(n, '\0');
  if (n > 0 && !in.read(s.data(), n)) throw FormatError("truncated parameter file");
  return s;
}

}  // namespace

template <typename T>
void WriteParameters(std::ostream &out, const ParameterSet<T> &params,
                     std::string_view header) {
  out.write(kMagic, sizeof(kMagic));
  PutU32(out, static_cast<std::uint32_t>(header.size()));
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  PutU32(out, static_cast<std::uint32_t>(params.size()));
  for (const auto &e : params) {
    PutU32(out, static_cast<std::uint32_t>(e.name.size()));
    out.write(e.name.data(), static_cast<std::streamsize>(e.name.size()));
    PutU32(out, static_cast<std::uint32_t>(e.tensor.rank()));
    for (int d : e.tensor.shape()) PutU32(out, static_cast<std::uint32_t>(d));
    for (T v : e.tensor.values()) PutU32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
  }
  if (!out) throw FormatError("failed writing parameter file");
}

template <typename T>
std::string ReadParameters(std::istream &in, ParameterSet<T> &params) {
  char magic[5];
  if (!in.read(magic, 5) || std::memcmp(magic, kMagic, 5) != 0) {
    throw FormatError("not an NREG1 parameter file");
  }
  std::string header = GetBytes(in, GetU32(in));
  const std::uint32_t count = GetU32(in);
  ParameterSet<T> loaded;
  for (std::uint32_t k = 0; k < count; ++k) {
    std::string name = GetBytes(in, GetU32(in));
    const std::uint32_t rank = GetU32(in);
    if (rank == 0 || rank > 8) throw FormatError("bad rank for parameter " + name);
    Shape shape;
    for (std::uint32_t d = 0; d < rank; ++d) shape.push_back(static_cast<int>(GetU32(in)));
    Tensor<T> t(shape);
    for (auto &v : t.values()) v = static_cast<T>(std::bit_cast<float>(GetU32(in)));
    loaded.Add(std::move(name), std::move(t));
  }
  params = std::move(loaded);
  return header;
}

template class ParameterSet<float>;
template class ParameterSet<double>;

#define NREG_INSTANTIATE_PARAMS(T)                                                  \
  template Tensor<T> GlorotInit<T>(int, int, Rng &);                                \
  template struct AdadeltaState<T>;                                                 \
  template void AdadeltaUpdate<T>(std::span<T>, std::span<const T>, std::span<T>,   \
                                  std::span<T>, double, double);                    \
  template void AdadeltaStep<T>(ParameterSet<T> &, AdadeltaState<T> &);             \
  template double ClipGradNorm<T>(ParameterSet<T> &, double);                       \
  template void WriteParameters<T>(std::ostream &, const ParameterSet<T> &,         \
                                   std::string_view);                               \
  template std::string ReadParameters<T>(std::istream &, ParameterSet<T> &);

NREG_INSTANTIATE_PARAMS(float)
NREG_INSTANTIATE_PARAMS(double)

#undef NREG_INSTANTIATE_PARAMS

}  // namespace nreg

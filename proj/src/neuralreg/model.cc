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

#include "nreg/neuralreg/model.h"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "nreg/error.h"

namespace nreg {
namespace {

template <typename T>
constexpr const char *PrecisionName() {
  return sizeof(T) == 4 ? "f32" : "f64";
}

bool EndsWith(const std::string &s, std::string_view suffix) { return s.ends_with(suffix); }

nlohmann::json VocabJson(const Vocabulary &v) { return nlohmann::json(v.tokens()); }

Vocabulary VocabFromJson(const nlohmann::json &j) {
  std::ostringstream lines;
  for (const auto &t : j) lines << t.get<std::string>() << '\n';
  std::istringstream in(lines.str());
  return Vocabulary::Read(in);
}

std::string ReadHeaderOnly(std::istream &in) {
  char magic[5];
  if (!in.read(magic, 5) || std::memcmp(magic, "NREG1", 5) != 0) {
    throw FormatError("not an NREG1 model file");
  }
  unsigned char len[4];
  if (!in.read(reinterpret_cast<char *>(len), 4)) throw FormatError("truncated model header");
  const std::uint32_t n = len[0] | (len[1] << 8) | (len[2] << 16) | (std::uint32_t(len[3]) << 24);
  std::string header(n, '\0');
  if (!in.read(header.data(), n)) throw FormatError("truncated model header");
  return header;
}

}  // namespace

template <typename T>
NeuralModel<T> NeuralModel<T>::Create(ModelConfig config, Vocabulary input_vocab,
                                      Vocabulary output_vocab) {
  config.Validate();
  NeuralModel<T> m;
  m.config = config;
  m.input_vocab = std::move(input_vocab);
  m.output_vocab = std::move(output_vocab);
  for (const auto &tok : m.output_vocab.tokens()) m.output_to_input.push_back(m.input_vocab.Index(tok));

  const int E = config.embedding_dim, h = config.hidden_dim, d = config.dec_dim();
  const int a = config.att_dim(), A = config.annotation_dim(), C = config.context_dim();
  auto add = [&](const std::string &name, Shape shape) { m.params.Add(name, Tensor<T>(shape)); };

  add("V", {m.input_vocab.size(), E});
  for (const char *side : {"pre", "pos"}) {
    for (const char *dir : {"fw", "bw"}) {
      const std::string p = std::string("enc.") + side + "." + dir + ".";
      add(p + "Wx", {4 * h, E});
      add(p + "Wh", {4 * h, h});
      add(p + "b", {4 * h});
    }
  }
  add("dec.Wx", {4 * d, C + 2 * E});
  add("dec.Wh", {4 * d, d});
  add("dec.b", {4 * d});
  if (config.variant != DecoderVariant::kSeq2Seq) {
    for (const char *side : {"pre", "pos"}) {
      const std::string p = std::string("att.") + side + ".";
      add(p + "W", {a, d});
      add(p + "U", {a, A});
      add(p + "v", {a});
    }
  }
  if (config.variant == DecoderVariant::kHierAtt) {
    for (const char *side : {"pre", "pos"}) {
      const std::string p = std::string("hier.") + side + ".";
      add(p + "W", {A, d});
      add(p + "U", {A, A});
      add(p + "v", {A});
    }
  }
  add("out.W", {m.output_vocab.size(), d});
  add("out.b", {m.output_vocab.size()});
  return m;
}

template <typename T>
NeuralModel<T> NeuralModel<T>::Create(ModelConfig config, Vocabulary input_vocab,
                                      Vocabulary output_vocab, Rng &rng) {
  NeuralModel<T> m = Create(std::move(config), std::move(input_vocab), std::move(output_vocab));
  m.Initialize(rng);
  return m;
}

template <typename T>
void NeuralModel<T>::Initialize(Rng &rng) {
  for (auto &entry : params) {
    Tensor<T> &t = entry.tensor;
    if (t.rank() == 2) {
      t = GlorotInit<T>(t.rows(), t.cols(), rng);
    } else if (EndsWith(entry.name, ".v")) {
      Tensor<T> g = GlorotInit<T>(1, static_cast<int>(t.size()), rng);
      std::copy(g.values().begin(), g.values().end(), t.values().begin());
    } else {
      t.fill(T(0));
      if (entry.name.starts_with("enc.") || entry.name == "dec.b") {
        const int n = static_cast<int>(t.size()) / 4;
        for (int i = n; i < 2 * n; ++i) t[i] = T(1);
      }
    }
  }
}

template <typename T>
template <typename U>
NeuralModel<U> NeuralModel<T>::Cast() const {
  NeuralModel<U> out = NeuralModel<U>::Create(config, input_vocab, output_vocab);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto &src = params.entry(i).tensor;
    auto &dst = out.params.entry(i).tensor;
    for (std::size_t k = 0; k < src.size(); ++k) dst[k] = static_cast<U>(src[k]);
  }
  return out;
}

template <typename T>
void SaveModel(std::ostream &out, const NeuralModel<T> &model) {
  nlohmann::ordered_json header;
  header["format"] = "nreg-model";
  header["version"] = 1;
  header["precision"] = PrecisionName<T>();
  header["config"] = nlohmann::ordered_json::parse(model.config.ToJson());
  header["input_vocab"] = VocabJson(model.input_vocab);
  header["output_vocab"] = VocabJson(model.output_vocab);
  WriteParameters(out, model.params, header.dump());
}

template <typename T>
void SaveModel(const std::string &path, const NeuralModel<T> &model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  SaveModel(out, model);
  if (!out) throw Error("failed writing " + path);
}

template <typename T>
NeuralModel<T> LoadModel(std::istream &in) {
  ParameterSet<T> loaded;
  const std::string header_text = ReadParameters(in, loaded);
  ModelConfig config;
  Vocabulary input, output;
  try {
    auto header = nlohmann::json::parse(header_text);
    if (header.at("format") != "nreg-model") throw FormatError("not a model file");
    if (header.at("version").get<int>() != 1) throw FormatError("unsupported model version");
    config = ModelConfig::FromJson(header.at("config").dump());
    input = VocabFromJson(header.at("input_vocab"));
    output = VocabFromJson(header.at("output_vocab"));
  } catch (const nlohmann::json::exception &e) {
    throw FormatError(std::string("bad model header: ") + e.what());
  }
  NeuralModel<T> model = NeuralModel<T>::Create(config, std::move(input), std::move(output));
  try {
    model.params.CopyValuesFrom(loaded);
  } catch (const DimensionError &e) {
    throw FormatError(std::string("model parameters disagree with header: ") + e.what());
  }
  return model;
}

template <typename T>
NeuralModel<T> LoadModel(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  return LoadModel<T>(in);
}

std::string ModelFilePrecision(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return nlohmann::json::parse(ReadHeaderOnly(in)).at("precision").get<std::string>();
  } catch (const nlohmann::json::exception &e) {
    throw FormatError(std::string("bad model header: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

template <typename T>
LstmState<T> LstmCell(Var<T> x, LstmState<T> prev, const LstmParams<T> &p) {
  const int n = prev.h.value().rows();
  if (p.Wh.value().rows() != 4 * n || p.Wh.value().cols() != n) {
    throw DimensionError("LSTM state of size " + std::to_string(n) + " does not fit Wh " +
                         ShapeString(p.Wh.shape()));
  }
  Var<T> z = Add(Add(MatMul(p.Wx, x), MatMul(p.Wh, prev.h)), p.b);
  Var<T> i = Sigmoid(Slice(z, 0, n));
  Var<T> f = Sigmoid(Slice(z, n, n));
  Var<T> g = Tanh(Slice(z, 2 * n, n));
  Var<T> o = Sigmoid(Slice(z, 3 * n, n));
  Var<T> c = Add(Mul(f, prev.c), Mul(i, g));
  return {Mul(o, Tanh(c)), c};
}

template <typename T>
AttentionResult<T> Attention(Var<T> s_prev, Var<T> annotations, const AttentionParams<T> &p,
                             Var<T> keys) {
  if (!annotations.valid()) throw ContractError("attention over an empty context");
  if (!keys.valid()) keys = MatMul(annotations, Transpose(p.U));
  Var<T> energy = Tanh(AddRowwise(keys, MatMul(p.W, s_prev)));
  Var<T> alpha = Softmax(MatMul(energy, p.v));
  return {alpha, MatMul(Transpose(annotations), alpha)};
}

template <typename T>
Network<T>::Network(NeuralModel<T> &model, Tape<T> &tape, bool training, Rng *rng)
    : model_(model), tape_(tape), training_(training), rng_(rng) {
  if (training_ && model_.config.dropout > 0 && rng_ == nullptr) {
    throw ContractError("training with dropout needs an Rng");
  }
}

template <typename T>
Var<T> Network<T>::P(const std::string &name) {
  return tape_.Param(model_.params.Get(name));
}

template <typename T>
LstmParams<T> Network<T>::Lstm(const std::string &prefix) {
  return {P(prefix + "Wx"), P(prefix + "Wh"), P(prefix + "b")};
}

template <typename T>
Var<T> Network<T>::Zeros(int n) {
  return tape_.Constant(Tensor<T>(Shape{n}));
}

template <typename T>
Var<T> Network<T>::EncodeContext(const Tokens &tokens, bool pre) {
  if (tokens.empty()) return {};
  const std::string side = pre ? "enc.pre." : "enc.pos.";
  const int h = model_.config.hidden_dim;
  Var<T> V = P("V");
  std::vector<Var<T>> x;
  x.reserve(tokens.size());
  for (const auto &tok : tokens) x.push_back(Lookup(V, model_.input_vocab.Index(tok)));

  const std::size_t n = x.size();
  std::vector<Var<T>> fw(n), bw(n);
  LstmParams<T> pf = Lstm(side + "fw.");
  LstmState<T> s{Zeros(h), Zeros(h)};
  for (std::size_t t = 0; t < n; ++t) {
    s = LstmCell(x[t], s, pf);
    fw[t] = s.h;
  }
  LstmParams<T> pb = Lstm(side + "bw.");
  s = {Zeros(h), Zeros(h)};
  for (std::size_t t = n; t-- > 0;) {
    s = LstmCell(x[t], s, pb);
    bw[t] = s.h;
  }
  std::vector<Var<T>> rows;
  rows.reserve(n);
  for (std::size_t t = 0; t < n; ++t) rows.push_back(Concat<T>({fw[t], bw[t]}));
  return StackRows(rows);
}

template <typename T>
EncoderOutputs<T> Network<T>::Encode(const RefexInstance &instance) {
  EncoderOutputs<T> enc;
  const double p = model_.config.dropout;
  enc.pre = EncodeContext(instance.pre_context, true);
  enc.pos = EncodeContext(instance.pos_context, false);
  if (training_) {
    if (enc.pre.valid()) enc.pre = Dropout(enc.pre, p, true, *rng_);
    if (enc.pos.valid()) enc.pos = Dropout(enc.pos, p, true, *rng_);
  }
  enc.entity = Lookup(P("V"), model_.input_vocab.IndexOrThrow(instance.entity));
  if (model_.config.variant == DecoderVariant::kSeq2Seq) {
    enc.mean_context = ContextSeq2Seq(enc.pre, enc.pos);
  } else {
    if (enc.pre.valid()) enc.pre_keys = MatMul(enc.pre, Transpose(P("att.pre.U")));
    if (enc.pos.valid()) enc.pos_keys = MatMul(enc.pos, Transpose(P("att.pos.U")));
  }
  return enc;
}

template <typename T>
Var<T> Network<T>::ContextSeq2Seq(Var<T> h_pre, Var<T> h_pos) {
  const int A = model_.config.annotation_dim();
  return Concat<T>({h_pre.valid() ? MeanRows(h_pre) : Zeros(A),
                    h_pos.valid() ? MeanRows(h_pos) : Zeros(A)});
}

template <typename T>
Var<T> Network<T>::ContextCAtt(Var<T> s_prev, const EncoderOutputs<T> &enc,
                               DecoderState<T> *state) {
  const int A = model_.config.annotation_dim();
  Var<T> parts[2];
  const Var<T> *h[2] = {&enc.pre, &enc.pos};
  const Var<T> *keys[2] = {&enc.pre_keys, &enc.pos_keys};
  const char *side[2] = {"att.pre.", "att.pos."};
  for (int k = 0; k < 2; ++k) {
    if (!h[k]->valid()) {
      parts[k] = Zeros(A);
      continue;
    }
    const std::string p = side[k];
    AttentionResult<T> r = Attention(s_prev, *h[k], {P(p + "W"), P(p + "U"), P(p + "v")}, *keys[k]);
    parts[k] = r.summary;
    if (state != nullptr) (k == 0 ? state->alpha_pre : state->alpha_pos) = r.alpha;
  }
  return Concat<T>({parts[0], parts[1]});
}

template <typename T>
Var<T> Network<T>::ContextHierAtt(Var<T> s_prev, Var<T> summary_pre, Var<T> summary_pos,
                                  DecoderState<T> *state) {
  std::vector<Var<T>> projected, energies;
  const Var<T> summaries[2] = {summary_pre, summary_pos};
  const char *side[2] = {"hier.pre.", "hier.pos."};
  for (int k = 0; k < 2; ++k) {
    if (!summaries[k].valid()) continue;
    const std::string p = side[k];
    Var<T> proj = MatMul(P(p + "U"), summaries[k]);
    Var<T> act = Tanh(Add(MatMul(P(p + "W"), s_prev), proj));
    energies.push_back(Sum(Mul(P(p + "v"), act)));
    projected.push_back(proj);
  }
  if (projected.empty()) return Zeros(model_.config.annotation_dim());
  Var<T> beta = Softmax(Concat(energies));
  if (state != nullptr) state->beta = beta;
  return MatMul(Transpose(StackRows(projected)), beta);
}

template <typename T>
DecoderState<T> Network<T>::InitialState() {
  const int d = model_.config.dec_dim();
  DecoderState<T> s;
  s.lstm = {Zeros(d), Zeros(d)};
  return s;
}

template <typename T>
std::pair<DecoderState<T>, Var<T>> Network<T>::Step(const DecoderState<T> &prev,
                                                    const EncoderOutputs<T> &enc, int y_prev) {
  if (y_prev < 0 || y_prev >= static_cast<int>(model_.output_to_input.size())) {
    throw VocabularyError("output token " + std::to_string(y_prev) + " out of range");
  }
  DecoderState<T> next;
  Var<T> s_prev = prev.lstm.h;
  Var<T> c;
  switch (model_.config.variant) {
    case DecoderVariant::kSeq2Seq:
      c = enc.mean_context;
      break;
    case DecoderVariant::kCAtt:
      c = ContextCAtt(s_prev, enc, &next);
      break;
    case DecoderVariant::kHierAtt: {
      Var<T> sums[2];
      const Var<T> *h[2] = {&enc.pre, &enc.pos};
      const Var<T> *keys[2] = {&enc.pre_keys, &enc.pos_keys};
      const char *side[2] = {"att.pre.", "att.pos."};
      for (int k = 0; k < 2; ++k) {
        if (!h[k]->valid()) continue;
        const std::string p = side[k];
        AttentionResult<T> r =
            Attention(s_prev, *h[k], {P(p + "W"), P(p + "U"), P(p + "v")}, *keys[k]);
        sums[k] = r.summary;
        (k == 0 ? next.alpha_pre : next.alpha_pos) = r.alpha;
      }
      c = ContextHierAtt(s_prev, sums[0], sums[1], &next);
      break;
    }
  }
  Var<T> x = Concat<T>({c, Lookup(P("V"), model_.output_to_input[y_prev]), enc.entity});
  if (training_) x = Dropout(x, model_.config.dropout, true, *rng_);
  next.lstm = LstmCell(x, prev.lstm, Lstm("dec."));
  Var<T> logits = Add(MatMul(P("out.W"), next.lstm.h), P("out.b"));
  return {next, logits};
}

template <typename T>
std::vector<int> Network<T>::Targets(const RefexInstance &instance) const {
  std::vector<int> targets;
  for (const auto &tok : instance.refex) targets.push_back(model_.output_vocab.Index(tok));
  for (int k = 0; k < model_.config.eos_stop_count; ++k) targets.push_back(Vocabulary::kEos);
  return targets;
}

template <typename T>
Var<T> Network<T>::InstanceLoss(const RefexInstance &instance) {
  EncoderOutputs<T> enc = Encode(instance);
  DecoderState<T> state = InitialState();
  int y_prev = Vocabulary::kBos;
  Var<T> loss;
  for (int target : Targets(instance)) {
    auto [next, logits] = Step(state, enc, y_prev);
    Var<T> nll = PickNegLogSoftmax(logits, target);
    loss = loss.valid() ? Add(loss, nll) : nll;
    state = next;
    y_prev = target;
  }
  return loss;
}

template <typename T>
Var<T> BatchLoss(NeuralModel<T> &model, const std::vector<const RefexInstance *> &batch,
                 Tape<T> &tape, bool training, Rng *rng) {
  if (batch.empty()) throw ContractError("empty batch");
  Network<T> net(model, tape, training, rng);
  Var<T> total;
  for (const RefexInstance *inst : batch) {
    Var<T> l = net.InstanceLoss(*inst);
    total = total.valid() ? Add(total, l) : l;
  }
  return Scale(total, T(1) / static_cast<T>(batch.size()));
}

template <typename T>
Var<T> BatchLoss(NeuralModel<T> &model, const std::vector<RefexInstance> &batch, Tape<T> &tape,
                 bool training, Rng *rng) {
  std::vector<const RefexInstance *> ptrs;
  for (const auto &inst : batch) ptrs.push_back(&inst);
  return BatchLoss(model, ptrs, tape, training, rng);
}

#define NREG_INSTANTIATE_MODEL(T)                                                          \
  template struct NeuralModel<T>;                                                          \
  template NeuralModel<float> NeuralModel<T>::Cast<float>() const;                         \
  template NeuralModel<double> NeuralModel<T>::Cast<double>() const;                       \
  template void SaveModel<T>(std::ostream &, const NeuralModel<T> &);                      \
  template void SaveModel<T>(const std::string &, const NeuralModel<T> &);                 \
  template NeuralModel<T> LoadModel<T>(std::istream &);                                    \
  template NeuralModel<T> LoadModel<T>(const std::string &);                               \
  template LstmState<T> LstmCell<T>(Var<T>, LstmState<T>, const LstmParams<T> &);          \
  template AttentionResult<T> Attention<T>(Var<T>, Var<T>, const AttentionParams<T> &,     \
                                           Var<T>);                                        \
  template class Network<T>;                                                               \
  template Var<T> BatchLoss<T>(NeuralModel<T> &, const std::vector<const RefexInstance *> &, \
                               Tape<T> &, bool, Rng *);                                    \
  template Var<T> BatchLoss<T>(NeuralModel<T> &, const std::vector<RefexInstance> &,       \
                               Tape<T> &, bool, Rng *);

NREG_INSTANTIATE_MODEL(float)
NREG_INSTANTIATE_MODEL(double)

#undef NREG_INSTANTIATE_MODEL

}  // namespace nreg

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

#ifndef NREG_NEURALREG_MODEL_H_
#define NREG_NEURALREG_MODEL_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nreg/corpus/instance.h"
#include "nreg/corpus/vocabulary.h"
#include "nreg/neuralreg/config.h"
#include "nreg/tensor/ops.h"
#include "nreg/tensor/parameters.h"

namespace nreg {

// All trainable tensors plus the configuration and vocabularies that give them
// meaning.
//
// Parameter names:
//   V                          shared input embeddings [|in| x E]
//   enc.{pre,pos}.{fw,bw}.Wx   [4h x E]   (gate order i, f, g, o)
//   enc.{pre,pos}.{fw,bw}.Wh   [4h x h]
//   enc.{pre,pos}.{fw,bw}.b    [4h]
//   dec.Wx [4d x (C + 2E)], dec.Wh [4d x d], dec.b [4d]
//   att.{pre,pos}.W [a x d], att.{pre,pos}.U [a x 2h], att.{pre,pos}.v [a]
//   hier.{pre,pos}.W [2h x d], hier.{pre,pos}.U [2h x 2h], hier.{pre,pos}.v [2h]
//   out.W [|out| x d], out.b [|out|]
// Attention parameters exist for catt and hieratt, hier.* for hieratt only.
template <typename T>
struct NeuralModel {
  ModelConfig config;
  Vocabulary input_vocab;
  Vocabulary output_vocab;
  ParameterSet<T> params;
  // Input-vocabulary row of every output token, for feeding y_prev back in.
  std::vector<int> output_to_input;

  // Zero-valued parameters of the right shapes.
  static NeuralModel Create(ModelConfig config, Vocabulary input_vocab, Vocabulary output_vocab);
  // Create followed by Initialize.
  static NeuralModel Create(ModelConfig config, Vocabulary input_vocab, Vocabulary output_vocab,
                            Rng &rng);

  // Glorot uniform for every matrix (vectors v count as 1 x n), zero biases
  // and forget-gate biases of 1.
  void Initialize(Rng &rng);

  // Converts values to another precision.
  template <typename U>
  NeuralModel<U> Cast() const;
};

// "NREG1" container whose header holds the config and both vocabularies as
// JSON. Values are stored as float32.
template <typename T>
void SaveModel(std::ostream &out, const NeuralModel<T> &model);
template <typename T>
void SaveModel(const std::string &path, const NeuralModel<T> &model);

// Throws FormatError when the file is not a model or the parameter shapes
// disagree with the stored config.
template <typename T>
NeuralModel<T> LoadModel(std::istream &in);
template <typename T>
NeuralModel<T> LoadModel(const std::string &path);

// The precision recorded in a model file header ("f32" or "f64").
std::string ModelFilePrecision(const std::string &path);

// ---------------------------------------------------------------------------
// Forward computation. All functions record on the tape of their inputs.

template <typename T>
struct LstmParams {
  Var<T> Wx, Wh, b;
};

template <typename T>
struct LstmState {
  Var<T> h, c;
};

// i, f, o = sigmoid, g = tanh; c' = f*c + i*g; h' = o*tanh(c').
template <typename T>
LstmState<T> LstmCell(Var<T> x, LstmState<T> prev, const LstmParams<T> &p);

template <typename T>
struct AttentionParams {
  Var<T> W, U, v;
};

template <typename T>
struct AttentionResult {
  Var<T> alpha;    // [m]
  Var<T> summary;  // [2h]
};

// e_j = v^T tanh(W s + U h_j); alpha = softmax(e); summary = sum_j alpha_j h_j.
// `keys` must be H U^T ([m x a]); pass an invalid Var to compute it here.
// Throws ContractError on an empty annotation matrix.
template <typename T>
AttentionResult<T> Attention(Var<T> s_prev, Var<T> annotations, const AttentionParams<T> &p,
                             Var<T> keys = {});

// Everything the decoder needs from one instance.
template <typename T>
struct EncoderOutputs {
  Var<T> pre;       // [m x 2h]; invalid when the pre-context is empty
  Var<T> pos;       // [l x 2h]; invalid when the pos-context is empty
  Var<T> pre_keys;  // attention keys of each side, when attention is used
  Var<T> pos_keys;
  Var<T> entity;    // V[entity]
  Var<T> mean_context;  // seq2seq only
};

template <typename T>
struct DecoderState {
  LstmState<T> lstm;
  // Attention weights of the last context computation; invalid for seq2seq.
  Var<T> alpha_pre, alpha_pos, beta;
};

// Binds a model to a tape. On a non-recording tape the model is only read,
// so several networks may share one model across threads.
template <typename T>
class Network {
 public:
  // Dropout is active only when `training` is set; `rng` may then not be null.
  Network(NeuralModel<T> &model, Tape<T> &tape, bool training = false, Rng *rng = nullptr);

  const NeuralModel<T> &model() const { return model_; }
  Tape<T> &tape() { return tape_; }

  // Bidirectional encoding; row t is [forward_t, backward_t]. Unknown tokens
  // map to UNK. Returns an invalid Var for an empty context.
  Var<T> EncodeContext(const Tokens &tokens, bool pre);

  // Throws VocabularyError when the entity is not in the input vocabulary.
  EncoderOutputs<T> Encode(const RefexInstance &instance);

  // concat(mean_t h_pre, mean_t h_pos); an empty side contributes zeros.
  Var<T> ContextSeq2Seq(Var<T> h_pre, Var<T> h_pos);

  // concat(summary_pre, summary_pos); an empty side contributes zeros.
  Var<T> ContextCAtt(Var<T> s_prev, const EncoderOutputs<T> &enc, DecoderState<T> *state);

  // beta = softmax_k(v_k^T tanh(W_k s + U_k c_k)); c = sum_k beta_k U_k c_k.
  // With one empty side the other summary is used alone (beta = 1); with
  // both empty c is zero.
  Var<T> ContextHierAtt(Var<T> s_prev, Var<T> summary_pre, Var<T> summary_pos,
                        DecoderState<T> *state);

  DecoderState<T> InitialState();

  // One decoder step on the output-vocabulary token y_prev. Returns the new
  // state and the logits W_c s + b.
  std::pair<DecoderState<T>, Var<T>> Step(const DecoderState<T> &prev,
                                          const EncoderOutputs<T> &enc, int y_prev);

  // Summed token NLL under teacher forcing. Targets are the refex tokens
  // followed by eos_stop_count EOS tokens.
  Var<T> InstanceLoss(const RefexInstance &instance);

  // Output-vocabulary targets for an instance (UNK for unknown tokens).
  std::vector<int> Targets(const RefexInstance &instance) const;

 private:
  Var<T> P(const std::string &name);
  LstmParams<T> Lstm(const std::string &prefix);
  Var<T> Zeros(int n);

  NeuralModel<T> &model_;
  Tape<T> &tape_;
  bool training_;
  Rng *rng_;
};

// Mean over instances of InstanceLoss. Throws ContractError on an empty
// batch.
template <typename T>
Var<T> BatchLoss(NeuralModel<T> &model, const std::vector<const RefexInstance *> &batch,
                 Tape<T> &tape, bool training = false, Rng *rng = nullptr);
template <typename T>
Var<T> BatchLoss(NeuralModel<T> &model, const std::vector<RefexInstance> &batch, Tape<T> &tape,
                 bool training = false, Rng *rng = nullptr);

}  // namespace nreg

#endif  // NREG_NEURALREG_MODEL_H_

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

#ifndef NREG_NEURALREG_DECODE_H_
#define NREG_NEURALREG_DECODE_H_

#include <vector>

#include "nreg/neuralreg/model.h"

namespace nreg {

// (5 + len)^alpha / 6^alpha.
double LengthPenalty(int length, double alpha);

struct Hypothesis {
  std::vector<int> tokens;  // output-vocabulary ids, EOS included
  double log_prob = 0.0;
  int eos_seen = 0;
  double score = 0.0;       // log_prob / LengthPenalty(|tokens|)
};

// Beam search over the output vocabulary; BOS and PAD are never emitted.
//
// Every step expands each live hypothesis by every token and keeps the
// beam_size best candidates by score, ties broken by the lexicographically
// smaller token sequence. Candidates that emit their eos_stop_count-th EOS or
// reach max_len leave the beam for the finished pool; the search ends when
// the beam is empty. The result is the best finished hypothesis by score,
// then shorter length, then token order.
template <typename T>
Hypothesis BeamSearch(const NeuralModel<T> &model, const RefexInstance &instance, int beam_size);

// Step-by-step argmax (lowest id on ties) with the same stopping rule.
template <typename T>
Hypothesis GreedyDecode(const NeuralModel<T> &model, const RefexInstance &instance);

// Hypothesis tokens as strings with every EOS removed.
template <typename T>
Tokens HypothesisTokens(const NeuralModel<T> &model, const Hypothesis &hyp);

struct Prediction {
  Tokens tokens;
  bool fallback = false;  // entity unknown to the model; OnlyNames used
};

// Decodes every instance with `beam_size` (greedy when 1) on up to `threads`
// threads. Output order follows the input.
template <typename T>
std::vector<Prediction> DecodeAll(const NeuralModel<T> &model,
                                  const std::vector<RefexInstance> &instances, int beam_size,
                                  int threads = 1);

// NREG_THREADS if set and positive, else 1.
int ThreadsFromEnv();

}  // namespace nreg

#endif  // NREG_NEURALREG_DECODE_H_

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

#include "nreg/neuralreg/decode.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "nreg/baselines/only_names.h"
#include "nreg/error.h"

namespace nreg {
namespace {

bool Emittable(int id) { return id != Vocabulary::kBos && id != Vocabulary::kPad; }

// log softmax of a logits vector, in double.
std::vector<double> LogSoftmax(const Tensor<double> &logits) {
  std::vector<double> out(logits.values().begin(), logits.values().end());
  double mx = -std::numeric_limits<double>::infinity();
  for (double v : out) mx = std::max(mx, v);
  double z = 0;
  for (double v : out) z += std::exp(v - mx);
  const double lse = mx + std::log(z);
  for (double &v : out) v -= lse;
  return out;
}

template <typename T>
std::vector<double> LogProbs(Var<T> logits) {
  const auto &v = logits.value();
  Tensor<double> d(v.shape());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = static_cast<double>(v[i]);
  return LogSoftmax(d);
}

bool Better(const Hypothesis &a, const Hypothesis &b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.tokens.size() != b.tokens.size()) return a.tokens.size() < b.tokens.size();
  return a.tokens < b.tokens;
}

bool Finished(const Hypothesis &h, const ModelConfig &c) {
  return h.eos_seen >= c.eos_stop_count || static_cast<int>(h.tokens.size()) >= c.max_len;
}

}  // namespace

double LengthPenalty(int length, double alpha) {
  return std::pow(5.0 + length, alpha) / std::pow(6.0, alpha);
}

template <typename T>
Hypothesis BeamSearch(const NeuralModel<T> &model, const RefexInstance &instance,
                      int beam_size) {
  if (beam_size < 1) throw ConfigError("beam_size must be >= 1");
  const ModelConfig &cfg = model.config;
  // Inference tapes only read parameter values.
  auto &mutable_model = const_cast<NeuralModel<T> &>(model);
  Tape<T> tape(false);
  Network<T> net(mutable_model, tape);
  EncoderOutputs<T> enc = net.Encode(instance);

  struct Live {
    Hypothesis hyp;
    DecoderState<T> state;
    std::vector<double> next_log_probs;
  };
  std::vector<Live> beam;
  {
    auto [state, logits] = net.Step(net.InitialState(), enc, Vocabulary::kBos);
    beam.push_back({Hypothesis{}, state, LogProbs(logits)});
  }

  struct Candidate {
    int parent;
    int token;
    Hypothesis hyp;
  };
  std::vector<Hypothesis> finished;
  while (!beam.empty()) {
    std::vector<Candidate> candidates;
    for (int b = 0; b < static_cast<int>(beam.size()); ++b) {
      const Live &live = beam[b];
      for (int w = 0; w < static_cast<int>(live.next_log_probs.size()); ++w) {
        if (!Emittable(w)) continue;
        Candidate c{b, w, live.hyp};
        c.hyp.tokens.push_back(w);
        c.hyp.log_prob += live.next_log_probs[w];
        c.hyp.eos_seen += w == Vocabulary::kEos;
        c.hyp.score = c.hyp.log_prob /
                      LengthPenalty(static_cast<int>(c.hyp.tokens.size()), cfg.length_norm_alpha);
        candidates.push_back(std::move(c));
      }
    }
    const std::size_t keep = std::min<std::size_t>(beam_size, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + keep, candidates.end(),
                      [](const Candidate &a, const Candidate &b) { return Better(a.hyp, b.hyp); });
    std::vector<Live> next;
    for (std::size_t k = 0; k < keep; ++k) {
      Candidate &c = candidates[k];
      if (Finished(c.hyp, cfg)) {
        finished.push_back(std::move(c.hyp));
        continue;
      }
      auto [state, logits] = net.Step(beam[c.parent].state, enc, c.token);
      next.push_back({std::move(c.hyp), state, LogProbs(logits)});
    }
    beam = std::move(next);
  }
  return *std::min_element(finished.begin(), finished.end(), Better);
}

template <typename T>
Hypothesis GreedyDecode(const NeuralModel<T> &model, const RefexInstance &instance) {
  const ModelConfig &cfg = model.config;
  auto &mutable_model = const_cast<NeuralModel<T> &>(model);
  Tape<T> tape(false);
  Network<T> net(mutable_model, tape);
  EncoderOutputs<T> enc = net.Encode(instance);
  DecoderState<T> state = net.InitialState();
  Hypothesis hyp;
  int y_prev = Vocabulary::kBos;
  while (!Finished(hyp, cfg)) {
    auto [next, logits] = net.Step(state, enc, y_prev);
    std::vector<double> lp = LogProbs(logits);
    int best = -1;
    for (int w = 0; w < static_cast<int>(lp.size()); ++w) {
      if (Emittable(w) && (best < 0 || lp[w] > lp[best])) best = w;
    }
    hyp.tokens.push_back(best);
    hyp.log_prob += lp[best];
    hyp.eos_seen += best == Vocabulary::kEos;
    state = next;
    y_prev = best;
  }
  hyp.score = hyp.log_prob /
              LengthPenalty(static_cast<int>(hyp.tokens.size()), cfg.length_norm_alpha);
  return hyp;
}

template <typename T>
Tokens HypothesisTokens(const NeuralModel<T> &model, const Hypothesis &hyp) {
  Tokens out;
  for (int id : hyp.tokens) {
    if (id != Vocabulary::kEos) out.push_back(model.output_vocab.Token(id));
  }
  return out;
}

template <typename T>
std::vector<Prediction> DecodeAll(const NeuralModel<T> &model,
                                  const std::vector<RefexInstance> &instances, int beam_size,
                                  int threads) {
  std::vector<Prediction> out(instances.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < instances.size(); i += step) {
      const RefexInstance &inst = instances[i];
      if (!model.input_vocab.Contains(inst.entity)) {
        out[i] = {OnlyNamesTokens(inst.entity), true};
        continue;
      }
      Hypothesis h = beam_size == 1 ? GreedyDecode(model, inst) : BeamSearch(model, inst, beam_size);
      out[i] = {HypothesisTokens(model, h), false};
    }
  };
  threads = std::max(1, std::min<int>(threads, static_cast<int>(instances.size())));
  if (threads == 1) {
    work(0, 1);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        work(t, threads);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto &th : pool) th.join();
  for (auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

int ThreadsFromEnv() {
  const char *v = std::getenv("NREG_THREADS");
  if (v == nullptr) return 1;
  int n = std::atoi(v);
  return n > 0 ? n : 1;
}

#define NREG_INSTANTIATE_DECODE(T)                                                        \
  template Hypothesis BeamSearch<T>(const NeuralModel<T> &, const RefexInstance &, int);  \
  template Hypothesis GreedyDecode<T>(const NeuralModel<T> &, const RefexInstance &);     \
  template Tokens HypothesisTokens<T>(const NeuralModel<T> &, const Hypothesis &);        \
  template std::vector<Prediction> DecodeAll<T>(const NeuralModel<T> &,                   \
                                                const std::vector<RefexInstance> &, int, int);

NREG_INSTANTIATE_DECODE(float)
NREG_INSTANTIATE_DECODE(double)

#undef NREG_INSTANTIATE_DECODE

}  // namespace nreg

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

#include "nreg/neuralreg/train.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "nreg/neuralreg/decode.h"

namespace nreg {
namespace {

// Rng stream ids derived from the config seed.
constexpr std::uint64_t kInitStream = 1;
constexpr std::uint64_t kShuffleStream = 1ULL << 20;
constexpr std::uint64_t kDropoutStream = 1ULL << 40;

}  // namespace

template <typename T>
NeuralModel<T> InitModel(const ModelConfig &config, const std::vector<RefexInstance> &train) {
  auto [input, output] = BuildVocab(train, config.min_freq);
  Rng rng = Rng(config.seed).Fork(kInitStream);
  return NeuralModel<T>::Create(config, std::move(input), std::move(output), rng);
}

double ExactMatchAccuracy(const std::vector<Tokens> &predictions,
                          const std::vector<RefexInstance> &gold) {
  if (predictions.size() != gold.size()) {
    throw ContractError("predictions and gold differ in length");
  }
  if (gold.empty()) return 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    hits += Lowercase(predictions[i]) == Lowercase(gold[i].refex);
  }
  return static_cast<double>(hits) / gold.size();
}

template <typename T>
TrainResult Train(NeuralModel<T> &model, const std::vector<RefexInstance> &train,
                  const std::vector<RefexInstance> &dev,
                  const std::function<void(const EpochRecord &)> &on_epoch) {
  if (train.empty()) throw ContractError("training set is empty");
  if (dev.empty()) throw ContractError("development set is empty");
  const ModelConfig &cfg = model.config;
  cfg.Validate();
  const Rng base(cfg.seed);
  const int threads = ThreadsFromEnv();

  AdadeltaState<T> opt = AdadeltaState<T>::For(model.params, cfg.adadelta_rho, cfg.adadelta_eps);
  ParameterSet<T> best = model.params;
  TrainResult result;
  int since_improvement = 0;

  std::vector<std::size_t> order(train.size());
  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    const auto start = std::chrono::steady_clock::now();
    std::iota(order.begin(), order.end(), 0);
    Rng shuffle = base.Fork(kShuffleStream + epoch);
    shuffle.Shuffle(order);

    double loss_sum = 0;
    int batch_index = 0;
    for (std::size_t b = 0; b < order.size(); b += cfg.batch_size, ++batch_index) {
      std::vector<const RefexInstance *> batch;
      for (std::size_t k = b; k < std::min(order.size(), b + cfg.batch_size); ++k) {
        batch.push_back(&train[order[k]]);
      }
      Rng dropout = base.Fork(kDropoutStream + (static_cast<std::uint64_t>(epoch) << 20) +
                              batch_index);
      model.params.ZeroGrad();
      try {
        Tape<T> tape;
        Var<T> loss = BatchLoss(model, batch, tape, true, &dropout);
        tape.Backward(loss);
        const double norm = ClipGradNorm(model.params, cfg.clip_norm);
        if (!std::isfinite(norm)) throw NumericError("non-finite gradient norm");
        loss_sum += static_cast<double>(loss.value()[0]) * batch.size();
      } catch (const NumericError &e) {
        throw TrainingError(std::string(e.what()) + " (epoch " + std::to_string(epoch) +
                                ", batch " + std::to_string(batch_index) + ")",
                            epoch, batch_index);
      }
      AdadeltaStep(model.params, opt);
    }

    std::vector<Prediction> predictions = DecodeAll(model, dev, cfg.beam_size, threads);
    std::vector<Tokens> tokens;
    tokens.reserve(predictions.size());
    for (auto &p : predictions) tokens.push_back(std::move(p.tokens));
    EpochRecord record;
    record.epoch = epoch;
    record.train_loss = loss_sum / train.size();
    record.dev_accuracy = ExactMatchAccuracy(tokens, dev);
    record.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.history.push_back(record);
    if (on_epoch) on_epoch(record);

    if (record.dev_accuracy > result.best_dev_accuracy) {
      result.best_dev_accuracy = record.dev_accuracy;
      result.best_epoch = epoch;
      best.CopyValuesFrom(model.params);
      since_improvement = 0;
    } else {
      ++since_improvement;
    }
    if (cfg.target_dev_accuracy > 0 && record.dev_accuracy >= cfg.target_dev_accuracy) {
      result.stop_reason = "target";
      break;
    }
    if (since_improvement > cfg.patience) {
      result.stop_reason = "patience";
      break;
    }
  }
  if (result.stop_reason.empty()) result.stop_reason = "max_epochs";
  model.params.CopyValuesFrom(best);
  model.params.ZeroGrad();
  return result;
}

void WriteTrainingLog(std::ostream &out, const TrainResult &result) {
  out << "epoch\ttrain_loss\tdev_accuracy\n";
  char buf[128];
  for (const auto &r : result.history) {
    std::snprintf(buf, sizeof(buf), "%d\t%.6f\t%.6f\n", r.epoch, r.train_loss, r.dev_accuracy);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf), "# stop=%s best_epoch=%d best_dev_accuracy=%.6f\n",
                result.stop_reason.c_str(), result.best_epoch, result.best_dev_accuracy);
  out << buf;
}

#define NREG_INSTANTIATE_TRAIN(T)                                                            \
  template NeuralModel<T> InitModel<T>(const ModelConfig &, const std::vector<RefexInstance> &); \
  template TrainResult Train<T>(NeuralModel<T> &, const std::vector<RefexInstance> &,        \
                                const std::vector<RefexInstance> &,                          \
                                const std::function<void(const EpochRecord &)> &);

NREG_INSTANTIATE_TRAIN(float)
NREG_INSTANTIATE_TRAIN(double)

#undef NREG_INSTANTIATE_TRAIN

}  // namespace nreg

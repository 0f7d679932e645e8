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

#ifndef NREG_NEURALREG_TRAIN_H_
#define NREG_NEURALREG_TRAIN_H_

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "nreg/error.h"
#include "nreg/neuralreg/model.h"

namespace nreg {

struct EpochRecord {
  int epoch = 0;
  double train_loss = 0.0;    // mean per-instance loss over the epoch
  double dev_accuracy = 0.0;
  double seconds = 0.0;
};

struct TrainResult {
  std::vector<EpochRecord> history;
  int best_epoch = 0;
  double best_dev_accuracy = -1.0;
  std::string stop_reason;  // "max_epochs", "patience" or "target"
};

// A non-finite value during training.
class TrainingError : public NumericError {
 public:
  TrainingError(const std::string &what, int epoch, int batch)
      : NumericError(what), epoch_(epoch), batch_(batch) {}
  int epoch() const { return epoch_; }
  int batch() const { return batch_; }

 private:
  int epoch_;
  int batch_;
};

// Vocabularies from `train` (config.min_freq) and freshly initialized
// parameters, all seeded from config.seed.
template <typename T>
NeuralModel<T> InitModel(const ModelConfig &config, const std::vector<RefexInstance> &train);

// Minibatch Adadelta with seeded shuffling. After every epoch the dev set is
// decoded with config.beam_size and scored by lowercased exact match; the
// best epoch's parameters are kept and restored at the end. Training stops
// after max_epochs, once more than `patience` epochs pass without a strict
// improvement, or when target_dev_accuracy > 0 is reached. Throws
// TrainingError on a non-finite loss or gradient.
template <typename T>
TrainResult Train(NeuralModel<T> &model, const std::vector<RefexInstance> &train,
                  const std::vector<RefexInstance> &dev,
                  const std::function<void(const EpochRecord &)> &on_epoch = {});

// Fraction of instances whose prediction equals the gold refex,
// case-insensitively.
double ExactMatchAccuracy(const std::vector<Tokens> &predictions,
                          const std::vector<RefexInstance> &gold);

// TSV with header "epoch  train_loss  dev_accuracy", one row per epoch, then
// "# stop=<reason> best_epoch=<n> best_dev_accuracy=<x>". No timings.
void WriteTrainingLog(std::ostream &out, const TrainResult &result);

}  // namespace nreg

#endif  // NREG_NEURALREG_TRAIN_H_

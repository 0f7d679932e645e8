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

#ifndef NREG_CLI_COMMANDS_H_
#define NREG_CLI_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nreg/corpus/dataset.h"

namespace nreg::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;    // unreadable, malformed or misaligned input
inline constexpr int kExitNumeric = 3;  // non-finite values during training

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct PrepareOptions {
  std::string templates;
  std::string out_dir;
  SplitRatios ratios;
  std::uint64_t seed = 1;
};

// Writes train/dev/test instance TSVs (heuristic features filled in), both
// vocabularies, the split manifest, form statistics, the list of alignment
// failures and manifest.json. Any alignment failure makes the exit code 2;
// the other texts are still written.
int Prepare(const PrepareOptions &opt, std::ostream &log);

struct TrainOptions {
  std::string train;
  std::string dev;
  std::string out;       // model file, or a directory for the ferreira system
  std::string log_path;  // default: <out>.log.tsv
  std::string config_file;
  KeyValues overrides;   // applied after the config file
  std::string precision = "f32";
  std::string system = "neural";
};

// Neural: trains with early stopping on dev and writes the best model, the
// training log and <out>.manifest.json. Ferreira: fits the form model and
// variant table into the directory <out>.
int Train(const TrainOptions &opt, std::ostream &log);

struct PredictOptions {
  std::string model;  // unused for onlynames
  std::string instances;
  std::string out;
  std::string system = "neural";
  int beam = 0;  // 0: the model's configured beam size
};

// Writes "id<TAB>refex" rows in input order plus <out>.manifest.json.
// Entities unknown to the neural model fall back to OnlyNames; their count
// is recorded in the manifest.
int Predict(const PredictOptions &opt, std::ostream &log);

struct EvaluateOptions {
  std::string gold;
  std::string templates;  // optional; enables text accuracy and BLEU
  KeyValues systems;      // (name, predictions file)
  std::string out_dir;
  int iterations = 10000;
  std::uint64_t seed = 1;
};

// Writes report.tsv, report.txt, significance.tsv and manifest.json.
// Prediction files must cover exactly the gold instance IDs; otherwise the
// first 10 mismatches are listed and the exit code is 2.
int Evaluate(const EvaluateOptions &opt, std::ostream &log);

// Reads a predictions file written by Predict.
std::vector<std::pair<std::string, Tokens>> ReadPredictions(const std::string &path);

}  // namespace nreg::cli

#endif  // NREG_CLI_COMMANDS_H_

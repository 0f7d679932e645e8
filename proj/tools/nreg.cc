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

// nreg: prepare, train, predict, evaluate.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nreg/cli/commands.h"
#include "nreg/corpus/text.h"

namespace {

using nreg::cli::KeyValues;

std::pair<std::string, std::string> SplitPair(const std::string &arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw CLI::ValidationError(arg, "expected key=value");
  }
  return {arg.substr(0, eq), arg.substr(eq + 1)};
}

nreg::SplitRatios ParseRatios(const std::string &text) {
  const auto parts = nreg::SplitFields(text, ',');
  if (parts.size() != 3) throw CLI::ValidationError("--ratios", "expected train,dev,test");
  try {
    return {std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2])};
  } catch (const std::exception &) {
    throw CLI::ValidationError("--ratios", "not a number: " + text);
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Neural referring expression generation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", NREG_VERSION_STRING);

  int code = nreg::cli::kExitOk;

  nreg::cli::PrepareOptions prep;
  std::string ratios = "0.8,0.1,0.1";
  auto *prepare = app.add_subcommand("prepare", "Extract instances from a template file");
  prepare->add_option("templates", prep.templates, "Template file")->required();
  prepare->add_option("-o,--out", prep.out_dir, "Output directory")->required();
  prepare->add_option("--ratios", ratios, "Split ratios train,dev,test")
      ->capture_default_str();
  prepare->add_option("--seed", prep.seed, "Split seed")->capture_default_str();
  prepare->callback([&] {
    prep.ratios = ParseRatios(ratios);
    code = nreg::cli::Prepare(prep, std::cerr);
  });

  nreg::cli::TrainOptions tr;
  std::vector<std::string> sets;
  std::string variant, dropout, beam, seed;
  auto *train = app.add_subcommand("train", "Train a model");
  train->add_option("--train", tr.train, "Training instances")->required();
  train->add_option("--dev", tr.dev, "Development instances (neural)");
  train->add_option("-o,--out", tr.out, "Model file (directory for ferreira)")->required();
  train->add_option("--log", tr.log_path, "Training log TSV (default <out>.log.tsv)");
  train->add_option("--config", tr.config_file, "key=value config file");
  train->add_option("--set", sets, "Config override key=value (repeatable)");
  train->add_option("--variant", variant, "Decoder variant")
      ->check(CLI::IsMember({"seq2seq", "catt", "hieratt"}));
  train->add_option("--dropout", dropout, "Dropout probability");
  train->add_option("--beam", beam, "Beam size for dev decoding");
  train->add_option("--seed", seed, "Random seed");
  train->add_option("--precision", tr.precision, "Floating-point precision")
      ->check(CLI::IsMember({"f32", "f64"}))
      ->capture_default_str();
  train->add_option("--system", tr.system, "System to train")
      ->check(CLI::IsMember({"neural", "ferreira"}))
      ->capture_default_str();
  train->callback([&] {
    for (const auto &s : sets) tr.overrides.push_back(SplitPair(s));
    for (const auto &[key, value] : {std::pair<std::string, std::string>{"variant", variant},
                                     {"dropout", dropout},
                                     {"beam_size", beam},
                                     {"seed", seed}}) {
      if (!value.empty()) tr.overrides.emplace_back(key, value);
    }
    code = nreg::cli::Train(tr, std::cerr);
  });

  nreg::cli::PredictOptions pr;
  auto *predict = app.add_subcommand("predict", "Predict a refex for every instance");
  predict->add_option("--model", pr.model, "Model file or ferreira directory");
  predict->add_option("--instances", pr.instances, "Instance TSV")->required();
  predict->add_option("-o,--out", pr.out, "Predictions TSV")->required();
  predict->add_option("--system", pr.system, "System")
      ->check(CLI::IsMember({"neural", "onlynames", "ferreira"}))
      ->capture_default_str();
  predict->add_option("--beam", pr.beam, "Beam size (default: the model's)")
      ->check(CLI::PositiveNumber);
  predict->callback([&] { code = nreg::cli::Predict(pr, std::cerr); });

  nreg::cli::EvaluateOptions ev;
  std::vector<std::string> preds;
  auto *evaluate = app.add_subcommand("evaluate", "Score predictions against gold");
  evaluate->add_option("--gold", ev.gold, "Gold instance TSV")->required();
  evaluate->add_option("--templates", ev.templates, "Template file for text-level scores");
  evaluate->add_option("--pred", preds, "System predictions name=path (repeatable)")
      ->required();
  evaluate->add_option("-o,--out", ev.out_dir, "Output directory")->required();
  evaluate->add_option("--iterations", ev.iterations, "Randomization iterations")
      ->check(CLI::Range(1000, 100000000))
      ->capture_default_str();
  evaluate->add_option("--seed", ev.seed, "Randomization seed")->capture_default_str();
  evaluate->callback([&] {
    for (const auto &p : preds) ev.systems.push_back(SplitPair(p));
    code = nreg::cli::Evaluate(ev, std::cout);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? nreg::cli::kExitOk : nreg::cli::kExitInput;
  }
  return code;
}

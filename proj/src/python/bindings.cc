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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nreg/baselines/only_names.h"
#include "nreg/cli/commands.h"
#include "nreg/corpus/dataset.h"
#include "nreg/corpus/text.h"
#include "nreg/error.h"
#include "nreg/eval/bleu.h"
#include "nreg/eval/metrics.h"
#include "nreg/eval/significance.h"
#include "nreg/neuralreg/decode.h"
#include "nreg/neuralreg/model.h"

namespace py = pybind11;

namespace nreg {
namespace {

using CommandResult = std::pair<int, std::string>;

template <typename Fn>
CommandResult RunCommand(Fn &&fn) {
  std::ostringstream log;
  int code;
  {
    py::gil_scoped_release release;
    code = fn(log);
  }
  return {code, log.str()};
}

py::dict InstanceDict(const RefexInstance &i) {
  py::dict d;
  d["id"] = i.id();
  d["text_id"] = i.text_id;
  d["occurrence"] = i.occurrence;
  d["entity"] = i.entity;
  d["pre_context"] = i.pre_context;
  d["pos_context"] = i.pos_context;
  d["refex"] = i.refex;
  d["form"] = std::string(FormName(i.form));
  if (i.features) {
    d["syntactic_position"] = std::string(PositionName(i.features->position));
    d["text_status"] = std::string(StatusName(i.features->text_status));
    d["sentence_status"] = std::string(StatusName(i.features->sentence_status));
  }
  return d;
}

template <typename T>
std::vector<std::string> DecodeWith(const std::string &model_path,
                                    const std::vector<RefexInstance> &insts, int beam) {
  const NeuralModel<T> model = LoadModel<T>(model_path);
  std::vector<std::string> out;
  for (const auto &p : DecodeAll(model, insts, beam > 0 ? beam : model.config.beam_size,
                                 ThreadsFromEnv())) {
    out.push_back(Join(p.tokens));
  }
  return out;
}

}  // namespace
}  // namespace nreg

PYBIND11_MODULE(_core, m) {
  using namespace nreg;
  m.doc() = "Referring expression generation: corpus preparation, models and evaluation.";
  py::register_exception<Error>(m, "NregError", PyExc_ValueError);

  m.def("tokenize", [](const std::string &s) { return Tokenize(s); }, py::arg("text"));
  m.def("only_names", [](const std::string &id) { return OnlyNames(id); }, py::arg("entity"));
  m.def(
      "classify_form", [](const Tokens &t) { return std::string(FormName(ClassifyForm(t))); },
      py::arg("refex"));
  m.def(
      "edit_distance",
      [](const std::string &a, const std::string &b) { return EditDistance(a, b); },
      py::arg("a"), py::arg("b"), "Levenshtein distance over code points.");
  m.def(
      "corpus_bleu",
      [](const std::vector<Tokens> &cand, const std::vector<Tokens> &refs) {
        const BleuScore b = CorpusBleu(cand, refs);
        py::dict d;
        d["score"] = b.score;
        d["precisions"] = std::vector<double>(b.precisions.begin(), b.precisions.end());
        d["brevity_penalty"] = b.brevity_penalty;
        return d;
      },
      py::arg("candidates"), py::arg("references"));
  m.def(
      "mcnemar",
      [](int b, int c) {
        const TestResult r = McNemar(b, c);
        return std::make_pair(r.statistic, r.p_value);
      },
      py::arg("b"), py::arg("c"), "(statistic, p) from the discordant counts.");
  m.def(
      "wilcoxon",
      [](const std::vector<double> &x, const std::vector<double> &y) {
        const TestResult r = Wilcoxon(x, y);
        return std::make_pair(r.statistic, r.p_value);
      },
      py::arg("x"), py::arg("y"));
  m.def("length_penalty", &LengthPenalty, py::arg("length"), py::arg("alpha") = 0.6);

  m.def(
      "read_instances",
      [](const std::string &path) {
        py::list out;
        for (const auto &i : ReadInstancesFile(path)) out.append(InstanceDict(i));
        return out;
      },
      py::arg("path"));
  m.def(
      "decode",
      [](const std::string &model, const std::string &instances, int beam) {
        const auto insts = ReadInstancesFile(instances);
        py::gil_scoped_release release;
        return ModelFilePrecision(model) == "f64" ? DecodeWith<double>(model, insts, beam)
                                                  : DecodeWith<float>(model, insts, beam);
      },
      py::arg("model"), py::arg("instances"), py::arg("beam") = 0,
      "Refex strings for every instance in a TSV file.");

  m.def(
      "prepare",
      [](const std::string &templates, const std::string &out_dir,
         std::tuple<double, double, double> ratios, std::uint64_t seed) {
        cli::PrepareOptions o{templates, out_dir,
                              {std::get<0>(ratios), std::get<1>(ratios), std::get<2>(ratios)},
                              seed};
        return RunCommand([&](std::ostream &log) { return cli::Prepare(o, log); });
      },
      py::arg("templates"), py::arg("out_dir"), py::arg("ratios") = std::make_tuple(0.8, 0.1, 0.1),
      py::arg("seed") = 1, "Returns (exit_code, log).");
  m.def(
      "train",
      [](const std::string &train, const std::string &out, const std::string &dev,
         const std::map<std::string, std::string> &overrides, const std::string &precision,
         const std::string &system, const std::string &config_file, const std::string &log_path) {
        cli::TrainOptions o;
        o.train = train;
        o.dev = dev;
        o.out = out;
        o.log_path = log_path;
        o.config_file = config_file;
        o.overrides.assign(overrides.begin(), overrides.end());
        o.precision = precision;
        o.system = system;
        return RunCommand([&](std::ostream &log) { return cli::Train(o, log); });
      },
      py::arg("train"), py::arg("out"), py::arg("dev") = "",
      py::arg("overrides") = std::map<std::string, std::string>{}, py::arg("precision") = "f32",
      py::arg("system") = "neural", py::arg("config_file") = "", py::arg("log_path") = "");
  m.def(
      "predict",
      [](const std::string &instances, const std::string &out, const std::string &model,
         const std::string &system, int beam) {
        cli::PredictOptions o{model, instances, out, system, beam};
        return RunCommand([&](std::ostream &log) { return cli::Predict(o, log); });
      },
      py::arg("instances"), py::arg("out"), py::arg("model") = "", py::arg("system") = "neural",
      py::arg("beam") = 0);
  m.def(
      "evaluate",
      [](const std::string &gold, const std::map<std::string, std::string> &predictions,
         const std::string &out_dir, const std::string &templates, int iterations,
         std::uint64_t seed) {
        cli::EvaluateOptions o;
        o.gold = gold;
        o.templates = templates;
        o.systems.assign(predictions.begin(), predictions.end());
        o.out_dir = out_dir;
        o.iterations = iterations;
        o.seed = seed;
        return RunCommand([&](std::ostream &log) { return cli::Evaluate(o, log); });
      },
      py::arg("gold"), py::arg("predictions"), py::arg("out_dir"), py::arg("templates") = "",
      py::arg("iterations") = 10000, py::arg("seed") = 1);
}

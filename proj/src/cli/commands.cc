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

#include "nreg/cli/commands.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "nreg/baselines/features.h"
#include "nreg/baselines/ferreira.h"
#include "nreg/baselines/only_names.h"
#include "nreg/cli/manifest.h"
#include "nreg/corpus/template_file.h"
#include "nreg/corpus/vocabulary.h"
#include "nreg/error.h"
#include "nreg/eval/report.h"
#include "nreg/neuralreg/decode.h"
#include "nreg/neuralreg/train.h"

namespace nreg::cli {
namespace fs = std::filesystem;
namespace {

void RequireFile(const std::string &path, const char *what) {
  if (path.empty()) throw ConfigError(std::string("missing ") + what);
  if (!fs::exists(path)) throw FormatError(std::string(what) + " not found: " + path);
}

// Refuses to write over any of the inputs.
void CheckDistinct(const std::string &output, const std::vector<std::string> &inputs) {
  const fs::path out = fs::weakly_canonical(output);
  for (const auto &in : inputs) {
    if (!in.empty() && fs::weakly_canonical(in) == out) {
      throw ConfigError("output " + output + " would overwrite input " + in);
    }
  }
}

std::ofstream OpenOut(const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  return out;
}

std::string ReadAll(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Maps library errors onto exit codes.
int Guard(std::ostream &log, const std::function<int()> &body) {
  try {
    return body();
  } catch (const TrainingError &e) {
    log << "error: non-finite value at epoch " << e.epoch() << ", batch " << e.batch() << ": "
        << e.what() << '\n';
    return kExitNumeric;
  } catch (const NumericError &e) {
    log << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception &e) {
    log << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

void WriteFormStats(std::ostream &out, const DatasetSplit &split) {
  out << "split\tform\tcount\tpercent\n";
  auto rows = [&](const std::string &name, const std::vector<RefexInstance> &insts) {
    std::map<Form, std::size_t> counts;
    for (const auto &i : insts) ++counts[i.form];
    for (Form f : kAllForms) {
      const double pct = insts.empty() ? 0.0 : 100.0 * counts[f] / insts.size();
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", pct);
      out << name << '\t' << FormName(f) << '\t' << counts[f] << '\t' << buf << '\n';
    }
  };
  std::vector<RefexInstance> all = split.train;
  all.insert(all.end(), split.dev.begin(), split.dev.end());
  all.insert(all.end(), split.test.begin(), split.test.end());
  rows("all", all);
  rows("train", split.train);
  rows("dev", split.dev);
  rows("test", split.test);
}

ModelConfig BuildConfig(const TrainOptions &opt) {
  ModelConfig config;
  if (!opt.config_file.empty()) {
    for (const auto &[k, v] : ModelConfig::ParseKeyValues(ReadAll(opt.config_file))) config.Set(k, v);
  }
  for (const auto &[k, v] : opt.overrides) config.Set(k, v);
  config.Validate();
  return config;
}

template <typename T>
void TrainNeural(const TrainOptions &opt, const ModelConfig &config,
                 const std::vector<RefexInstance> &train, const std::vector<RefexInstance> &dev,
                 RunManifest &manifest, std::ostream &log) {
  NeuralModel<T> model = InitModel<T>(config, train);
  log << "vocabulary: " << model.input_vocab.size() << " input, " << model.output_vocab.size()
      << " output; " << model.params.NumValues() << " parameters\n";
  nlohmann::ordered_json seconds = nlohmann::ordered_json::array();
  TrainResult result = Train(model, train, dev, [&](const EpochRecord &r) {
    log << "epoch " << r.epoch << " loss " << r.train_loss << " dev accuracy " << r.dev_accuracy
        << '\n';
    seconds.push_back(r.seconds);
  });
  log << "stopped: " << result.stop_reason << " (best epoch " << result.best_epoch
      << ", dev accuracy " << result.best_dev_accuracy << ")\n";
  SaveModel(opt.out, model);
  const std::string log_path = opt.log_path.empty() ? opt.out + ".log.tsv" : opt.log_path;
  {
    auto out = OpenOut(log_path);
    WriteTrainingLog(out, result);
  }
  manifest.AddOutput(opt.out);
  manifest.AddOutput(log_path);
  manifest["stop_reason"] = result.stop_reason;
  manifest["best_epoch"] = result.best_epoch;
  manifest["best_dev_accuracy"] = result.best_dev_accuracy;
  manifest["epoch_seconds"] = seconds;
}

template <typename T>
std::vector<Prediction> PredictNeural(const std::string &path, const std::vector<RefexInstance> &insts,
                                      int beam, RunManifest &manifest) {
  NeuralModel<T> model = LoadModel<T>(path);
  if (beam <= 0) beam = model.config.beam_size;
  manifest["beam"] = beam;
  manifest["variant"] = std::string(VariantName(model.config.variant));
  return DecodeAll(model, insts, beam, ThreadsFromEnv());
}

}  // namespace

int Prepare(const PrepareOptions &opt, std::ostream &log) {
  return Guard(log, [&] {
    RequireFile(opt.templates, "template file");
    if (opt.out_dir.empty()) throw ConfigError("missing output directory");
    RunManifest manifest("prepare");
    manifest.AddInput(opt.templates);
    const auto entries = ParseTemplateFileAt(opt.templates);
    CorpusInstances corpus = BuildCorpus(entries);
    const FeatureSource source = FillFeatures(corpus.instances);
    DatasetSplit split = SplitDataset(corpus.instances, opt.ratios, opt.seed);
    auto [input_vocab, output_vocab] = BuildVocab(split.train);

    fs::create_directories(opt.out_dir);
    auto path = [&](const char *name) { return (fs::path(opt.out_dir) / name).string(); };
    for (const char *name : {"train.tsv", "dev.tsv", "test.tsv", "split.txt", "vocab.input.txt",
                             "vocab.output.txt", "stats.tsv", "failures.tsv"}) {
      CheckDistinct(path(name), {opt.templates});
    }
    const std::pair<const char *, const std::vector<RefexInstance> *> parts[] = {
        {"train.tsv", &split.train}, {"dev.tsv", &split.dev}, {"test.tsv", &split.test}};
    for (const auto &[name, insts] : parts) {
      auto out = OpenOut(path(name));
      WriteInstances(out, *insts);
    }
    {
      auto out = OpenOut(path("split.txt"));
      WriteSplitManifest(out, split);
    }
    {
      auto out = OpenOut(path("vocab.input.txt"));
      input_vocab.Write(out);
    }
    {
      auto out = OpenOut(path("vocab.output.txt"));
      output_vocab.Write(out);
    }
    {
      auto out = OpenOut(path("stats.tsv"));
      WriteFormStats(out, split);
    }
    {
      auto out = OpenOut(path("failures.tsv"));
      out << "text_id\tline\tmessage\n";
      for (const auto &f : corpus.failures) {
        out << f.text_id << '\t' << f.line << '\t' << f.message << '\n';
        log << "alignment failure in " << f.text_id << " (line " << f.line << "): " << f.message
            << '\n';
      }
    }
    for (const char *name : {"train.tsv", "dev.tsv", "test.tsv", "split.txt", "vocab.input.txt",
                             "vocab.output.txt", "stats.tsv", "failures.tsv"}) {
      manifest.AddOutput(path(name));
    }
    manifest["seed"] = opt.seed;
    manifest["ratios"] = {opt.ratios.train, opt.ratios.dev, opt.ratios.test};
    manifest["texts"] = entries.size();
    manifest["instances"] = corpus.instances.size();
    manifest["constants_dropped"] = corpus.constants_dropped;
    manifest["alignment_failures"] = corpus.failures.size();
    manifest["feature_source"] = std::string(FeatureSourceName(source));
    manifest.Write(path("manifest.json"));
    log << entries.size() << " texts, " << corpus.instances.size() << " instances ("
        << split.train.size() << " train, " << split.dev.size() << " dev, " << split.test.size()
        << " test), " << corpus.failures.size() << " alignment failures\n";
    return corpus.failures.empty() ? kExitOk : kExitInput;
  });
}

int Train(const TrainOptions &opt, std::ostream &log) {
  return Guard(log, [&] {
    RequireFile(opt.train, "training file");
    if (opt.out.empty()) throw ConfigError("missing output path");
    if (!opt.config_file.empty()) RequireFile(opt.config_file, "config file");
    if (opt.system == "neural") RequireFile(opt.dev, "development file");
    CheckDistinct(opt.out, {opt.train, opt.dev, opt.config_file});

    RunManifest manifest("train");
    manifest.AddInput(opt.train);
    if (!opt.dev.empty()) manifest.AddInput(opt.dev);
    if (!opt.config_file.empty()) manifest.AddInput(opt.config_file);
    manifest["system"] = opt.system;
    const auto train = ReadInstancesFile(opt.train);
    if (train.empty()) throw ContractError("training file has no instances: " + opt.train);

    if (opt.system == "ferreira") {
      FerreiraModel model = FerreiraModel::Train(train);
      model.Save(opt.out);
      manifest.AddOutput((fs::path(opt.out) / "form_model.txt").string());
      manifest.AddOutput((fs::path(opt.out) / "variants.tsv").string());
      std::vector<RefexInstance> copy = train;
      manifest["feature_source"] = std::string(FeatureSourceName(FillFeatures(copy)));
      manifest.Write((fs::path(opt.out) / "manifest.json").string());
      log << "variant table: " << model.variants.size() << " entries\n";
      return kExitOk;
    }
    if (opt.system != "neural") throw ConfigError("cannot train system '" + opt.system + "'");

    const ModelConfig config = BuildConfig(opt);
    const auto dev = ReadInstancesFile(opt.dev);
    manifest["config"] = nlohmann::ordered_json::parse(config.ToJson());
    manifest["seed"] = config.seed;
    manifest["precision"] = opt.precision;
    if (opt.precision == "f32") {
      TrainNeural<float>(opt, config, train, dev, manifest, log);
    } else if (opt.precision == "f64") {
      TrainNeural<double>(opt, config, train, dev, manifest, log);
    } else {
      throw ConfigError("precision must be f32 or f64, got '" + opt.precision + "'");
    }
    manifest.Write(opt.out + ".manifest.json");
    return kExitOk;
  });
}

int Predict(const PredictOptions &opt, std::ostream &log) {
  return Guard(log, [&] {
    RequireFile(opt.instances, "instance file");
    if (opt.system != "onlynames") RequireFile(opt.model, "model");
    if (opt.out.empty()) throw ConfigError("missing output path");
    CheckDistinct(opt.out, {opt.instances, opt.model});

    RunManifest manifest("predict");
    manifest.AddInput(opt.instances);
    manifest["system"] = opt.system;
    const auto insts = ReadInstancesFile(opt.instances);

    std::vector<Prediction> preds;
    if (opt.system == "onlynames") {
      for (const auto &i : insts) preds.push_back({OnlyNamesTokens(i.entity), false});
    } else if (opt.system == "ferreira") {
      for (const char *f : {"form_model.txt", "variants.tsv"}) {
        manifest.AddInput((fs::path(opt.model) / f).string());
      }
      FerreiraModel model = FerreiraModel::Load(opt.model);
      std::vector<RefexInstance> copy = insts;
      manifest["feature_source"] = std::string(FeatureSourceName(FillFeatures(copy)));
      for (const auto &i : copy) preds.push_back({model.Predict(i), false});
    } else if (opt.system == "neural") {
      manifest.AddInput(opt.model);
      const std::string precision = ModelFilePrecision(opt.model);
      manifest["precision"] = precision;
      preds = precision == "f64" ? PredictNeural<double>(opt.model, insts, opt.beam, manifest)
                                 : PredictNeural<float>(opt.model, insts, opt.beam, manifest);
    } else {
      throw ConfigError("unknown system '" + opt.system + "'");
    }

    std::size_t fallbacks = 0;
    {
      auto out = OpenOut(opt.out);
      out << "id\trefex\n";
      for (std::size_t k = 0; k < insts.size(); ++k) {
        out << insts[k].id() << '\t' << Join(preds[k].tokens) << '\n';
        fallbacks += preds[k].fallback;
      }
    }
    if (fallbacks > 0) {
      log << "warning: " << fallbacks << " instance(s) with entities unknown to the model used "
          << "the name fallback\n";
    }
    manifest["instances"] = insts.size();
    manifest["fallbacks"] = fallbacks;
    manifest.AddOutput(opt.out);
    manifest.Write(opt.out + ".manifest.json");
    return kExitOk;
  });
}

std::vector<std::pair<std::string, Tokens>> ReadPredictions(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::vector<std::pair<std::string, Tokens>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || (line_no == 1 && line == "id\trefex")) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw FormatError(path + ": line " + std::to_string(line_no) + ": expected id<TAB>refex");
    }
    out.emplace_back(line.substr(0, tab), SplitWhitespace(line.substr(tab + 1)));
  }
  return out;
}

int Evaluate(const EvaluateOptions &opt, std::ostream &log) {
  return Guard(log, [&] {
    RequireFile(opt.gold, "gold file");
    if (!opt.templates.empty()) RequireFile(opt.templates, "template file");
    if (opt.systems.empty()) throw ConfigError("no prediction files given");
    for (const auto &[name, file] : opt.systems) RequireFile(file, "predictions");
    if (opt.out_dir.empty()) throw ConfigError("missing output directory");

    RunManifest manifest("evaluate");
    manifest.AddInput(opt.gold);
    if (!opt.templates.empty()) manifest.AddInput(opt.templates);
    const auto golds = ReadInstancesFile(opt.gold);
    std::vector<Tokens> gold_tokens;
    for (const auto &g : golds) gold_tokens.push_back(g.refex);
    std::vector<TemplateEntry> entries;
    if (!opt.templates.empty()) entries = ParseTemplateFileAt(opt.templates);

    std::vector<SystemOutput> systems;
    std::set<std::string> names;
    for (const auto &[name, file] : opt.systems) {
      if (!names.insert(name).second) throw ConfigError("duplicate system name " + name);
      manifest.AddInput(file);
      std::map<std::string, Tokens> by_id;
      std::vector<std::string> mismatches;
      for (auto &[id, toks] : ReadPredictions(file)) {
        if (!by_id.emplace(id, toks).second) mismatches.push_back("duplicate prediction " + id);
      }
      SystemOutput sys{name, {}, {}};
      std::set<std::string> gold_ids;
      for (const auto &g : golds) {
        gold_ids.insert(g.id());
        auto it = by_id.find(g.id());
        if (it == by_id.end()) {
          mismatches.push_back("missing prediction for " + g.id());
        } else {
          sys.predictions.push_back(it->second);
        }
      }
      for (const auto &[id, toks] : by_id) {
        if (!gold_ids.count(id)) mismatches.push_back("prediction for unknown instance " + id);
      }
      if (!mismatches.empty()) {
        log << "error: " << file << " is not aligned with " << opt.gold << " ("
            << mismatches.size() << " mismatches)\n";
        for (std::size_t k = 0; k < mismatches.size() && k < 10; ++k) {
          log << "  " << mismatches[k] << '\n';
        }
        return kExitInput;
      }
      if (!entries.empty()) {
        std::map<std::string, Tokens> keyed;
        for (std::size_t k = 0; k < golds.size(); ++k) keyed[golds[k].id()] = sys.predictions[k];
        sys.texts = RelexicalizeTexts(entries, keyed);
      }
      systems.push_back(std::move(sys));
    }

    std::vector<EvalReport> reports;
    for (const auto &s : systems) reports.push_back(Evaluate(s, gold_tokens));
    const auto rows = CompareSystems(systems, gold_tokens, opt.iterations, opt.seed);

    fs::create_directories(opt.out_dir);
    auto path = [&](const char *name) { return (fs::path(opt.out_dir) / name).string(); };
    {
      auto out = OpenOut(path("report.tsv"));
      WriteReportTsv(out, reports);
    }
    {
      auto out = OpenOut(path("report.txt"));
      WriteReportTable(out, reports);
    }
    {
      auto out = OpenOut(path("significance.tsv"));
      WriteSignificanceTsv(out, rows);
    }
    for (const char *name : {"report.tsv", "report.txt", "significance.tsv"}) {
      manifest.AddOutput(path(name));
    }
    manifest["seed"] = opt.seed;
    manifest["iterations"] = opt.iterations;
    manifest["instances"] = golds.size();
    manifest["texts"] = systems.front().texts.size();
    manifest.Write(path("manifest.json"));
    WriteReportTable(log, reports);
    return kExitOk;
  });
}

}  // namespace nreg::cli

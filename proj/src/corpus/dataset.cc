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

#include "nreg/corpus/dataset.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "nreg/error.h"
#include "nreg/tensor/rng.h"

namespace nreg {

DatasetSplit SplitDataset(const std::vector<RefexInstance> &instances, SplitRatios ratios,
                          std::uint64_t seed) {
  if (ratios.train < 0 || ratios.dev < 0 || ratios.test < 0 ||
      std::abs(ratios.train + ratios.dev + ratios.test - 1.0) > 1e-6) {
    throw ConfigError("split ratios must be non-negative and sum to 1");
  }
  std::vector<std::string> texts;
  std::unordered_map<std::string, int> text_split;
  for (const auto &inst : instances) {
    if (text_split.emplace(inst.text_id, -1).second) texts.push_back(inst.text_id);
  }
  Rng rng(seed);
  rng.Shuffle(texts);
  const std::size_t n = texts.size();
  const auto n_dev = static_cast<std::size_t>(std::floor(ratios.dev * n + 1e-9));
  const auto n_test = static_cast<std::size_t>(std::floor(ratios.test * n + 1e-9));
  const std::size_t n_train = n - n_dev - n_test;

  DatasetSplit split;
  for (std::size_t i = 0; i < n; ++i) {
    int which = i < n_train ? 0 : (i < n_train + n_dev ? 1 : 2);
    text_split[texts[i]] = which;
    (which == 0 ? split.train_texts : which == 1 ? split.dev_texts : split.test_texts)
        .push_back(texts[i]);
  }
  for (const auto &inst : instances) {
    int which = text_split[inst.text_id];
    (which == 0 ? split.train : which == 1 ? split.dev : split.test).push_back(inst);
  }
  return split;
}

void WriteSplitManifest(std::ostream &out, const DatasetSplit &split) {
  auto section = [&](const char *name, const std::vector<std::string> &texts) {
    out << "[" << name << "]\n";
    for (const auto &t : texts) out << t << '\n';
  };
  section("train", split.train_texts);
  section("dev", split.dev_texts);
  section("test", split.test_texts);
  out << "[counts]\n";
  out << "split\ttexts\tinstances\n";
  out << "train\t" << split.train_texts.size() << '\t' << split.train.size() << '\n';
  out << "dev\t" << split.dev_texts.size() << '\t' << split.dev.size() << '\n';
  out << "test\t" << split.test_texts.size() << '\t' << split.test.size() << '\n';
}

void WriteInstance(std::ostream &out, const RefexInstance &inst) {
  out << inst.entity << '\t' << Join(inst.pre_context) << '\t' << Join(inst.pos_context)
      << '\t' << Join(inst.refex) << '\t' << FormName(inst.form) << '\t';
  if (inst.features) {
    out << PositionName(inst.features->position) << '\t'
        << StatusName(inst.features->text_status) << '\t'
        << StatusName(inst.features->sentence_status);
  } else {
    out << "-\t-\t-";
  }
  if (!inst.text_id.empty()) out << '\t' << inst.text_id << '\t' << inst.occurrence;
  out << '\n';
}

void WriteInstances(std::ostream &out, const std::vector<RefexInstance> &instances) {
  for (const auto &inst : instances) WriteInstance(out, inst);
}

std::vector<RefexInstance> ReadInstances(std::istream &in) {
  std::vector<RefexInstance> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = SplitFields(line, '\t');
    if (fields.size() != 8 && fields.size() != 10) {
      throw FormatError("line " + std::to_string(line_no) + ": expected 8 or 10 columns, got " +
                        std::to_string(fields.size()));
    }
    try {
      RefexInstance inst;
      inst.entity = fields[0];
      if (inst.entity.empty()) throw FormatError("empty entity");
      inst.pre_context = SplitWhitespace(fields[1]);
      inst.pos_context = SplitWhitespace(fields[2]);
      inst.refex = SplitWhitespace(fields[3]);
      if (inst.refex.empty()) throw FormatError("empty referring expression");
      inst.form = fields[4].empty() || fields[4] == "-" ? ClassifyForm(inst.refex)
                                                        : ParseForm(fields[4]);
      if (fields[5] != "-" && fields[6] != "-" && fields[7] != "-") {
        inst.features = FormFeatures{ParsePosition(fields[5]), ParseStatus(fields[6]),
                                     ParseStatus(fields[7])};
      }
      if (fields.size() == 10) {
        inst.text_id = fields[8];
        inst.occurrence = std::stoi(fields[9]);
      } else {
        inst.text_id = "row" + std::to_string(line_no);
      }
      out.push_back(std::move(inst));
    } catch (const std::exception &e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<RefexInstance> ReadInstancesFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return ReadInstances(in);
}

}  // namespace nreg

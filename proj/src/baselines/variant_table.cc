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

#include "nreg/baselines/variant_table.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <tuple>

#include "nreg/baselines/only_names.h"
#include "nreg/error.h"

namespace nreg {

std::string VariantTable::Key(const std::string &entity, const FormFeatures &features, Form form,
                              int depth) {
  std::string key = entity;
  key += '\t';
  key += depth < 3 ? PositionName(features.position) : "*";
  key += '\t';
  key += depth < 2 ? StatusName(features.text_status) : "*";
  key += '\t';
  key += depth < 1 ? StatusName(features.sentence_status) : "*";
  key += '\t';
  key += FormName(form);
  return key;
}

VariantTable VariantTable::Train(const std::vector<RefexInstance> &instances) {
  VariantTable table;
  for (const auto &inst : instances) {
    if (!inst.features) throw ContractError("instance " + inst.id() + " has no form features");
    table.Add(inst.entity, *inst.features, inst.form, Join(inst.refex));
  }
  return table;
}

void VariantTable::Add(const std::string &entity, const FormFeatures &features, Form form,
                       const std::string &refex, long count) {
  full_[{entity, static_cast<int>(features.position), static_cast<int>(features.text_status),
         static_cast<int>(features.sentence_status), static_cast<int>(form), refex}] += count;
  for (int d = 0; d <= kMaxDepth; ++d) levels_[d][Key(entity, features, form, d)][refex] += count;
}

std::vector<std::pair<std::string, long>> VariantTable::Ranked(const std::string &entity,
                                                               const FormFeatures &features,
                                                               Form form, int depth) const {
  std::vector<std::pair<std::string, long>> out;
  auto it = levels_.at(depth).find(Key(entity, features, form, depth));
  if (it == levels_[depth].end()) return out;
  out.assign(it->second.begin(), it->second.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });
  return out;
}

VariantTable::Selection VariantTable::Select(const std::string &entity,
                                             const FormFeatures &features, Form form) const {
  for (int d = 0; d <= kMaxDepth; ++d) {
    auto ranked = Ranked(entity, features, form, d);
    if (!ranked.empty()) return {ranked.front().first, d};
  }
  return {OnlyNames(entity), kOnlyNamesDepth};
}

void VariantTable::Write(std::ostream &out) const {
  for (const auto &[key, count] : full_) {
    const auto &[entity, pos, text, sent, form, refex] = key;
    out << entity << '\t' << PositionName(static_cast<SyntacticPosition>(pos)) << '\t'
        << StatusName(static_cast<InfoStatus>(text)) << '\t'
        << StatusName(static_cast<InfoStatus>(sent)) << '\t' << FormName(static_cast<Form>(form))
        << '\t' << refex << '\t' << count << '\n';
  }
}

VariantTable VariantTable::Read(std::istream &in) {
  VariantTable table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto f = SplitFields(line, '\t');
    try {
      if (f.size() != 7) throw FormatError("expected 7 fields");
      std::size_t used = 0;
      long count = std::stol(f[6], &used);
      if (used != f[6].size() || count <= 0) throw FormatError("bad count '" + f[6] + "'");
      table.Add(f[0], {ParsePosition(f[1]), ParseStatus(f[2]), ParseStatus(f[3])},
                ParseForm(f[4]), f[5], count);
    } catch (const std::exception &e) {
      throw FormatError("variant table line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return table;
}

}  // namespace nreg

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

#ifndef NREG_BASELINES_VARIANT_TABLE_H_
#define NREG_BASELINES_VARIANT_TABLE_H_

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nreg/baselines/form_model.h"
#include "nreg/corpus/instance.h"

namespace nreg {

// Refex strings observed per (entity, position, text status, sentence status,
// form), with lookups that relax the key one feature at a time.
class VariantTable {
 public:
  // Back-off depth 0 uses the full key; 1 drops sentence status, 2 also text
  // status, 3 also position. kOnlyNamesDepth marks the final fallback.
  static constexpr int kMaxDepth = 3;
  static constexpr int kOnlyNamesDepth = 4;

  struct Selection {
    std::string refex;
    int depth = 0;
  };

  // Throws ContractError on instances without features.
  static VariantTable Train(const std::vector<RefexInstance> &instances);

  void Add(const std::string &entity, const FormFeatures &features, Form form,
           const std::string &refex, long count = 1);

  // Most frequent variant at the shallowest depth that has one; ties go to
  // the lexicographically smallest string. Never fails.
  Selection Select(const std::string &entity, const FormFeatures &features, Form form) const;

  // Variants with counts at one depth, most frequent first.
  std::vector<std::pair<std::string, long>> Ranked(const std::string &entity,
                                                   const FormFeatures &features, Form form,
                                                   int depth) const;

  std::size_t size() const { return full_.size(); }

  // TSV rows: entity, position, text_status, sentence_status, form, refex,
  // count.
  void Write(std::ostream &out) const;
  static VariantTable Read(std::istream &in);

  bool operator==(const VariantTable &other) const { return full_ == other.full_; }

 private:
  using Counts = std::map<std::string, long>;
  static std::string Key(const std::string &entity, const FormFeatures &features, Form form,
                          int depth);

  // Full-key rows, kept for serialization.
  std::map<std::tuple<std::string, int, int, int, int, std::string>, long> full_;
  std::array<std::map<std::string, Counts>, kMaxDepth + 1> levels_;
};

}  // namespace nreg

#endif  // NREG_BASELINES_VARIANT_TABLE_H_

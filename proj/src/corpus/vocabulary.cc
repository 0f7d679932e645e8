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

#include "nreg/corpus/vocabulary.h"

#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "nreg/error.h"

namespace nreg {

Vocabulary::Vocabulary() {
  for (std::string_view t : {kEosToken, kBosToken, kUnkToken, kPadToken}) Add(std::string(t));
}

int Vocabulary::Add(const std::string &token) {
  auto it = index_.find(token);
  if (it != index_.end()) return it->second;
  if (token.empty() || token.find_first_of("\t\n") != std::string::npos) {
    throw VocabularyError("invalid vocabulary token '" + token + "'");
  }
  const int id = static_cast<int>(tokens_.size());
  tokens_.push_back(token);
  index_.emplace(token, id);
  return id;
}

std::optional<int> Vocabulary::Find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Vocabulary::Index(std::string_view token) const { return Find(token).value_or(kUnk); }

int Vocabulary::IndexOrThrow(std::string_view token) const {
  auto id = Find(token);
  if (!id) throw VocabularyError("'" + std::string(token) + "' is not in the vocabulary");
  return *id;
}

const std::string &Vocabulary::Token(int index) const {
  if (index < 0 || index >= size()) {
    throw VocabularyError("index " + std::to_string(index) + " outside vocabulary");
  }
  return tokens_[index];
}

void Vocabulary::Write(std::ostream &out) const {
  for (const auto &t : tokens_) out << t << '\n';
}

Vocabulary Vocabulary::Read(std::istream &in) {
  Vocabulary v;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    if (row < kNumReserved) {
      if (line != v.tokens_[row]) throw FormatError("vocabulary file lacks reserved entries");
    } else if (v.Add(line) != row) {
      throw FormatError("duplicate vocabulary entry '" + line + "'");
    }
    ++row;
  }
  if (row < kNumReserved) throw FormatError("truncated vocabulary file");
  return v;
}

std::pair<Vocabulary, Vocabulary> BuildVocab(const std::vector<RefexInstance> &train,
                                             int min_freq) {
  if (train.empty()) throw ContractError("cannot build a vocabulary from no instances");
  std::map<std::string, int> input_counts, output_counts;
  std::set<std::string> entities;
  for (const auto &inst : train) {
    for (const auto &t : inst.pre_context) ++input_counts[t];
    for (const auto &t : inst.pos_context) ++input_counts[t];
    for (const auto &t : inst.refex) {
      ++input_counts[t];
      ++output_counts[t];
    }
    entities.insert(inst.entity);
  }
  std::set<std::string> input_tokens(entities);
  for (const auto &[t, c] : input_counts) {
    if (c >= min_freq) input_tokens.insert(t);
  }
  Vocabulary input, output;
  for (const auto &t : input_tokens) input.Add(t);
  for (const auto &[t, c] : output_counts) {
    if (c >= min_freq) output.Add(t);
  }
  return {std::move(input), std::move(output)};
}

}  // namespace nreg

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

#ifndef NREG_CORPUS_VOCABULARY_H_
#define NREG_CORPUS_VOCABULARY_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nreg/corpus/instance.h"

namespace nreg {

// Token <-> index map. Indices 0..3 are reserved for EOS, BOS, UNK and PAD.
class Vocabulary {
 public:
  static constexpr int kEos = 0;
  static constexpr int kBos = 1;
  static constexpr int kUnk = 2;
  static constexpr int kPad = 3;
  static constexpr int kNumReserved = 4;
  static constexpr std::string_view kEosToken = "<eos>";
  static constexpr std::string_view kBosToken = "<bos>";
  static constexpr std::string_view kUnkToken = "<unk>";
  static constexpr std::string_view kPadToken = "<pad>";

  Vocabulary();

  // Returns the existing index if present.
  int Add(const std::string &token);

  std::optional<int> Find(std::string_view token) const;
  // UNK when absent.
  int Index(std::string_view token) const;
  // Throws VocabularyError when absent.
  int IndexOrThrow(std::string_view token) const;
  const std::string &Token(int index) const;

  bool Contains(std::string_view token) const { return Find(token).has_value(); }
  int size() const { return static_cast<int>(tokens_.size()); }
  const std::vector<std::string> &tokens() const { return tokens_; }

  bool operator==(const Vocabulary &other) const { return tokens_ == other.tokens_; }

  // One token per line, reserved entries included.
  void Write(std::ostream &out) const;
  static Vocabulary Read(std::istream &in);

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
};

// Shared input vocabulary (context tokens, entity IDs, refex tokens) and
// output vocabulary (refex tokens). Tokens seen fewer than min_freq times are
// left out and map to UNK; entity IDs are always in. Entries are sorted so
// the result does not depend on instance order. Throws ContractError on an
// empty training set.
std::pair<Vocabulary, Vocabulary> BuildVocab(const std::vector<RefexInstance> &train,
                                             int min_freq = 1);

}  // namespace nreg

#endif  // NREG_CORPUS_VOCABULARY_H_

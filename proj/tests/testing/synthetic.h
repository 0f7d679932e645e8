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

// Small generated corpora for training tests.

#ifndef NREG_TESTS_TESTING_SYNTHETIC_H_
#define NREG_TESTS_TESTING_SYNTHETIC_H_

#include <string>
#include <vector>

#include "nreg/corpus/instance.h"
#include "nreg/tensor/rng.h"

namespace nreg::testing {

inline const std::vector<std::string> &EntityIds() {
  static const std::vector<std::string> ids = {
      "Alpha_Tower", "Beta_Bridge", "Gamma_Hall", "Delta_Park",   "Epsilon_Dam",
      "Zeta_Mill",   "Eta_Gate",    "Theta_Port", "Iota_Castle", "Kappa_Farm"};
  return ids;
}

inline RefexInstance MakeInstance(const std::string &text_id, int occurrence,
                                  const std::string &entity, const std::string &pre,
                                  const std::string &pos, const std::string &refex) {
  RefexInstance inst;
  inst.text_id = text_id;
  inst.occurrence = occurrence;
  inst.entity = entity;
  inst.pre_context = SplitWhitespace(pre);
  inst.pos_context = SplitWhitespace(pos);
  inst.refex = SplitWhitespace(refex);
  inst.form = ClassifyForm(inst.refex);
  return inst;
}

// 10 entities x 5 context patterns. The refex is a function of the entity and
// the pattern: a name, a pronoun, an entity-specific description, a name in
// object position and a possessive pronoun.
inline std::vector<RefexInstance> OverfitCorpus() {
  static const char *kinds[] = {"tower", "bridge", "hall", "park", "dam",
                                "mill",  "gate",   "port", "castle", "farm"};
  std::vector<RefexInstance> out;
  const auto &ids = EntityIds();
  for (int e = 0; e < 10; ++e) {
    const std::string id = ids[e];
    const std::string lower = Lowercase(id);
    std::string name = id;
    for (char &c : name) c = c == '_' ? ' ' : c;
    const std::string other = Lowercase(ids[(e + 3) % 10]);
    const std::string t = "s" + std::to_string(e);
    out.push_back(MakeInstance(t, 0, id, "", "was built in 1990 .", name));
    out.push_back(MakeInstance(t, 1, id, lower + " was built in 1990 .", "has five floors .", "It"));
    out.push_back(MakeInstance(t, 2, id, "people visit", ", a large place .",
                               std::string("the old ") + kinds[e]));
    out.push_back(MakeInstance(t, 3, id, other + " is near", ".", name));
    out.push_back(MakeInstance(t, 4, id, lower + " opened . visitors like", "garden .", "its"));
  }
  return out;
}

// Texts of one or two sentences over 10 entities. A mention whose entity
// already occurred in the same sentence is always "it"; every other mention
// is the entity's name, including repeated mentions in a later sentence and
// first mentions of a third entity in the very frame where a repeat would
// be a pronoun.
inline std::vector<RefexInstance> SalienceCorpus(int texts, std::uint64_t seed) {
  const auto &ids = EntityIds();
  auto name_of = [](const std::string &id) {
    std::string n = id;
    for (char &c : n) c = c == '_' ? ' ' : c;
    return n;
  };
  Rng rng(seed);
  std::vector<RefexInstance> out;
  for (int t = 0; t < texts; ++t) {
    const std::string text_id = "t" + std::to_string(t);
    const int x = static_cast<int>(rng.Below(10));
    int y = static_cast<int>(rng.Below(9));
    if (y >= x) ++y;
    int z = static_cast<int>(rng.Below(8));
    for (int k : {std::min(x, y), std::max(x, y)}) {
      if (z >= k) ++z;
    }
    const bool repeat = rng.Bernoulli(0.5);
    const bool second_sentence = rng.Bernoulli(0.5);
    const std::string X = ids[x], Y = ids[y], Z = ids[z];
    const std::string third = repeat ? X : Z;
    // Slots: X, Y, then third; optionally X again in a new sentence.
    std::vector<std::string> slot_ids = {X, Y, third};
    std::vector<std::string> words = {"", "is located in", "and", "has many buildings ."};
    if (second_sentence) {
      slot_ids.push_back(X);
      words.push_back("was founded long ago .");
    }
    std::vector<std::string> lower;
    for (const auto &s : slot_ids) lower.push_back(Lowercase(s));
    for (std::size_t k = 0; k < slot_ids.size(); ++k) {
      std::string pre, pos;
      for (std::size_t j = 0; j < slot_ids.size(); ++j) {
        std::string &side = j < k ? pre : pos;
        if (j < k) {
          if (!words[j].empty()) side += words[j] + " ";
          side += lower[j] + " ";
        } else if (j > k) {
          side += lower[j] + " ";
        }
        if (j >= k) side += words[j + 1] + " ";
      }
      if (k > 0 && !words[0].empty()) pre = words[0] + " " + pre;
      const bool in_sentence_repeat = k == 2 && repeat;
      out.push_back(MakeInstance(text_id, static_cast<int>(k), slot_ids[k], pre, pos,
                                 in_sentence_repeat ? "it" : name_of(slot_ids[k])));
    }
  }
  return out;
}

}  // namespace nreg::testing

#endif  // NREG_TESTS_TESTING_SYNTHETIC_H_

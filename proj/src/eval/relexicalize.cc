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

#include "nreg/eval/relexicalize.h"

#include "nreg/error.h"

namespace nreg {

Tokens Relexicalize(const Tokens &template_tokens, const std::map<int, Tokens> &assignments,
                    const std::map<std::string, Tokens> &constants) {
  Tokens out;
  int occurrence = 0;
  for (const std::string &tok : template_tokens) {
    if (!IsRoleTag(tok)) {
      out.push_back(tok);
      continue;
    }
    const Tokens *fill = nullptr;
    if (auto it = assignments.find(occurrence); it != assignments.end()) {
      fill = &it->second;
    } else if (auto c = constants.find(tok); c != constants.end()) {
      fill = &c->second;
    }
    if (fill == nullptr) {
      throw ContractError("no referring expression for " + tok + " (occurrence " +
                          std::to_string(occurrence) + ")");
    }
    out.insert(out.end(), fill->begin(), fill->end());
    ++occurrence;
  }
  return out;
}

std::vector<TextPair> RelexicalizeTexts(const std::vector<TemplateEntry> &entries,
                                        const std::map<std::string, Tokens> &predictions) {
  std::vector<TextPair> out;
  for (const TemplateEntry &e : entries) {
    auto first = predictions.lower_bound(e.text_id + ":");
    if (first == predictions.end() || first->first.rfind(e.text_id + ":", 0) != 0) continue;

    const auto gold = ExtractRefexes(e.original_tokens, e.template_tokens, e.map);
    std::map<int, Tokens> assigned;
    for (int k = 0; k < static_cast<int>(gold.size()); ++k) {
      const std::string id = e.text_id + ":" + std::to_string(k);
      const bool constant = IsConstant(*e.map.Find(gold[k].tag));
      if (auto it = predictions.find(id); it != predictions.end() && !constant) {
        assigned[k] = it->second;
      } else if (constant) {
        assigned[k] = gold[k].tokens;
      } else {
        throw ContractError("text " + e.text_id + " lacks a prediction for " + gold[k].tag +
                            " (instance " + id + ")");
      }
    }
    out.push_back({e.text_id, Relexicalize(e.template_tokens, assigned), e.original_tokens});
  }
  return out;
}

double TextAccuracy(const std::vector<TextPair> &texts) {
  if (texts.empty()) return 0.0;
  std::size_t hits = 0;
  for (const TextPair &t : texts) hits += Lowercase(t.candidate) == Lowercase(t.reference);
  return static_cast<double>(hits) / static_cast<double>(texts.size());
}

}  // namespace nreg

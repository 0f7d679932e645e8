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

#include "nreg/corpus/entities.h"

#include <cctype>

#include "nreg/corpus/text.h"
#include "nreg/error.h"

namespace nreg {

bool IsConstant(std::string_view id) {
  std::size_t at = id.rfind('@');
  if (at == std::string_view::npos || at == 0 || at + 1 == id.size()) return false;
  for (std::size_t i = at + 1; i < id.size(); ++i) {
    if (!std::isalnum(static_cast<unsigned char>(id[i]))) return false;
  }
  return true;
}

std::string ConstantValue(std::string_view id) {
  if (!IsConstant(id)) return std::string(id);
  return std::string(id.substr(0, id.rfind('@')));
}

std::string NormalizeConstant(std::string_view raw) {
  std::string s = Trim(raw);
  while (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = Trim(std::string_view(s).substr(1, s.size() - 2));
  }
  return Join(SplitWhitespace(s), "_");
}

std::string WikifiedForm(std::string_view id) {
  return NormalizeConstant(ConstantValue(id));
}

bool IsRoleTag(std::string_view token) {
  for (std::string_view role : {"AGENT-", "BRIDGE-", "PATIENT-"}) {
    if (!token.starts_with(role) || token.size() == role.size()) continue;
    for (std::size_t i = role.size(); i < token.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
    }
    return true;
  }
  return false;
}

void EntityTagMap::Add(std::string tag, std::string id) {
  if (by_tag_.count(tag) != 0) throw ContractError("duplicate tag " + tag);
  if (by_id_.count(id) != 0) throw ContractError("entity " + id + " already tagged");
  by_tag_.emplace(tag, entries_.size());
  by_id_.emplace(id, entries_.size());
  entries_.emplace_back(std::move(tag), std::move(id));
}

std::optional<std::string> EntityTagMap::Find(std::string_view tag) const {
  auto it = by_tag_.find(std::string(tag));
  if (it == by_tag_.end()) return std::nullopt;
  return entries_[it->second].second;
}

std::optional<std::string> EntityTagMap::TagOf(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return entries_[it->second].first;
}

EntityTagMap AssignEntityTags(const std::vector<Triple> &triples) {
  if (triples.empty()) throw ContractError("cannot tag an empty triple set");
  struct Seen {
    bool subject = false;
    bool object = false;
  };
  std::vector<std::string> order;
  std::unordered_map<std::string, Seen> seen;
  auto note = [&](const std::string &id, bool as_subject) {
    auto [it, inserted] = seen.try_emplace(id);
    if (inserted) order.push_back(id);
    (as_subject ? it->second.subject : it->second.object) = true;
  };
  for (const Triple &t : triples) {
    note(t.subject, true);
    note(t.object, false);
  }
  EntityTagMap map;
  int agents = 0, bridges = 0, patients = 0;
  for (const std::string &id : order) {
    const Seen &s = seen[id];
    if (s.subject && s.object) {
      map.Add("BRIDGE-" + std::to_string(++bridges), id);
    } else if (s.subject) {
      map.Add("AGENT-" + std::to_string(++agents), id);
    } else {
      map.Add("PATIENT-" + std::to_string(++patients), id);
    }
  }
  return map;
}

}  // namespace nreg

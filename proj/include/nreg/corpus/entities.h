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

#ifndef NREG_CORPUS_ENTITIES_H_
#define NREG_CORPUS_ENTITIES_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nreg {

// Subject/predicate/object. Objects may be typed constants such as
// "1988@year" or "\"120 million (Australian dollars)\"@USD".
struct Triple {
  std::string subject;
  std::string predicate;
  std::string object;
};

// True for IDs carrying a constant-type suffix ("@year", "@Integer", ...).
bool IsConstant(std::string_view id);

// The value part of a constant ("1988@year" -> "1988"); IDs pass through.
std::string ConstantValue(std::string_view id);

// Strips surrounding quotes and whitespace, and joins the remaining words
// with underscores: "120 million (Australian dollars)" ->
// "120_million_(Australian_dollars)".
std::string NormalizeConstant(std::string_view raw);

// The one-word form a reference takes inside a context: constants become
// their normalized value, entity IDs stay as they are.
std::string WikifiedForm(std::string_view id);

// True for AGENT-n, BRIDGE-n and PATIENT-n.
bool IsRoleTag(std::string_view token);

// Role tag -> entity/constant ID, in tag creation order.
class EntityTagMap {
 public:
  // Throws ContractError if the tag or the ID is already present.
  void Add(std::string tag, std::string id);

  std::optional<std::string> Find(std::string_view tag) const;
  std::optional<std::string> TagOf(std::string_view id) const;
  bool Contains(std::string_view tag) const { return Find(tag).has_value(); }

  const std::vector<std::pair<std::string, std::string>> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  bool operator==(const EntityTagMap &other) const { return entries_ == other.entries_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::unordered_map<std::string, std::size_t> by_tag_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

// Entities seen only as subjects become AGENT-n, only as objects PATIENT-n,
// on both sides BRIDGE-n. Numbering per role follows first appearance while
// scanning triples in order (subject before object). Constants are objects.
// Throws ContractError on an empty triple set.
EntityTagMap AssignEntityTags(const std::vector<Triple> &triples);

}  // namespace nreg

#endif  // NREG_CORPUS_ENTITIES_H_

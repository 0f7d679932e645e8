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

#include "nreg/corpus/instance.h"

#include "nreg/error.h"

namespace nreg {

std::string_view FormName(Form form) {
  switch (form) {
    case Form::kName: return "name";
    case Form::kPronoun: return "pronoun";
    case Form::kDescription: return "description";
    case Form::kDemonstrative: return "demonstrative";
  }
  return "name";
}

Form ParseForm(std::string_view name) {
  for (Form f : kAllForms) {
    if (FormName(f) == name) return f;
  }
  throw FormatError("unknown referential form '" + std::string(name) + "'");
}

std::string_view PositionName(SyntacticPosition p) {
  switch (p) {
    case SyntacticPosition::kSubject: return "subject";
    case SyntacticPosition::kObject: return "object";
    case SyntacticPosition::kGenitive: return "genitive";
  }
  return "subject";
}

std::string_view StatusName(InfoStatus s) { return s == InfoStatus::kNew ? "new" : "given"; }

SyntacticPosition ParsePosition(std::string_view name) {
  for (auto p : {SyntacticPosition::kSubject, SyntacticPosition::kObject,
                 SyntacticPosition::kGenitive}) {
    if (PositionName(p) == name) return p;
  }
  throw FormatError("unknown syntactic position '" + std::string(name) + "'");
}

InfoStatus ParseStatus(std::string_view name) {
  if (name == "new") return InfoStatus::kNew;
  if (name == "given") return InfoStatus::kGiven;
  throw FormatError("unknown information status '" + std::string(name) + "'");
}

const FormLexicon &FormLexicon::Default() {
  static const FormLexicon lexicon{
      {"he", "she", "it", "they", "him", "her", "them", "his", "hers", "its", "their",
       "theirs", "himself", "herself", "itself", "themselves", "who", "whom", "whose"},
      {"this", "that", "these", "those"},
      {"the", "a", "an"}};
  return lexicon;
}

Form ClassifyForm(const Tokens &refex, const FormLexicon &lexicon) {
  if (refex.empty()) throw ContractError("cannot classify an empty referring expression");
  const std::string first = Lowercase(refex.front());
  if (refex.size() == 1 && lexicon.pronouns.count(first) != 0) return Form::kPronoun;
  if (lexicon.demonstratives.count(first) != 0) return Form::kDemonstrative;
  if (lexicon.articles.count(first) != 0) return Form::kDescription;
  return Form::kName;
}

std::string RefexInstance::id() const {
  if (text_id.empty()) return {};
  return text_id + ":" + std::to_string(occurrence);
}

Tokens WikifiedTemplate(const Tokens &template_tokens, const EntityTagMap &map) {
  Tokens out;
  out.reserve(template_tokens.size());
  for (const auto &tok : template_tokens) {
    auto id = map.Find(tok);
    out.push_back(Lowercase(id ? WikifiedForm(*id) : tok));
  }
  return out;
}

std::pair<Tokens, Tokens> BuildContexts(const Tokens &template_tokens, int occurrence,
                                        const EntityTagMap &map) {
  int seen = 0;
  for (std::size_t i = 0; i < template_tokens.size(); ++i) {
    if (!map.Contains(template_tokens[i])) continue;
    if (seen++ != occurrence) continue;
    Tokens wiki = WikifiedTemplate(template_tokens, map);
    return {Tokens(wiki.begin(), wiki.begin() + i), Tokens(wiki.begin() + i + 1, wiki.end())};
  }
  throw ContractError("template has no tag occurrence " + std::to_string(occurrence));
}

std::vector<RefexInstance> FilterWiki(std::vector<RefexInstance> instances) {
  std::vector<RefexInstance> out;
  for (auto &inst : instances) {
    if (!IsConstant(inst.entity)) out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace nreg

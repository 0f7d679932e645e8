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

#ifndef NREG_CORPUS_INSTANCE_H_
#define NREG_CORPUS_INSTANCE_H_

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nreg/corpus/entities.h"
#include "nreg/corpus/text.h"

namespace nreg {

enum class Form { kName, kPronoun, kDescription, kDemonstrative };

inline constexpr std::array<Form, 4> kAllForms = {Form::kName, Form::kPronoun,
                                                  Form::kDescription, Form::kDemonstrative};

std::string_view FormName(Form form);
// Throws FormatError on unknown names.
Form ParseForm(std::string_view name);

enum class SyntacticPosition { kSubject, kObject, kGenitive };
enum class InfoStatus { kNew, kGiven };

std::string_view PositionName(SyntacticPosition p);
std::string_view StatusName(InfoStatus s);
SyntacticPosition ParsePosition(std::string_view name);
InfoStatus ParseStatus(std::string_view name);

// Grammatical position plus text- and sentence-level information status.
struct FormFeatures {
  SyntacticPosition position = SyntacticPosition::kSubject;
  InfoStatus text_status = InfoStatus::kNew;
  InfoStatus sentence_status = InfoStatus::kNew;

  bool operator==(const FormFeatures &) const = default;
};

// Word lists behind ClassifyForm.
struct FormLexicon {
  std::set<std::string> pronouns;
  std::set<std::string> demonstratives;
  std::set<std::string> articles;

  // he she it they him her them his hers its their theirs himself herself
  // itself themselves who whom whose; this that these those; the a an.
  static const FormLexicon &Default();
};

// Single token in the pronoun list -> pronoun; first token a demonstrative ->
// demonstrative (so a lone "that" is a demonstrative); first token an article
// -> description; otherwise name. Matching is case-insensitive.
Form ClassifyForm(const Tokens &refex, const FormLexicon &lexicon = FormLexicon::Default());

// One reference to a Wikipedia entity together with its discourse context.
struct RefexInstance {
  std::string text_id;
  int occurrence = 0;  // index among all tag occurrences of the template
  std::string entity;
  Tokens pre_context;  // lowercased, references as wikified IDs
  Tokens pos_context;
  Tokens refex;        // truecased
  Form form = Form::kName;
  std::optional<FormFeatures> features;

  // "text_id:occurrence", or empty when the instance has no text ID.
  std::string id() const;
};

// Tokens before and after the `occurrence`-th tag of the template, lowercased,
// with every tag replaced by the wikified form of its ID. Throws
// ContractError when the occurrence does not exist.
std::pair<Tokens, Tokens> BuildContexts(const Tokens &template_tokens, int occurrence,
                                        const EntityTagMap &map);

// The whole template with tags replaced by wikified IDs, lowercased.
Tokens WikifiedTemplate(const Tokens &template_tokens, const EntityTagMap &map);

// Drops instances whose entity is a typed constant.
std::vector<RefexInstance> FilterWiki(std::vector<RefexInstance> instances);

}  // namespace nreg

#endif  // NREG_CORPUS_INSTANCE_H_

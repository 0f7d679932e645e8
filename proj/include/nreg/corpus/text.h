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

#ifndef NREG_CORPUS_TEXT_H_
#define NREG_CORPUS_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace nreg {

using Tokens = std::vector<std::string>;

// Splits on whitespace, then peels leading/trailing punctuation
// (. , ; : ! ? " ( ) [ ]) into separate tokens and detaches a trailing
// possessive "'s". Internal punctuation ("AGENT-1", "1923-11-18", "120m")
// is kept. Idempotent on its own output joined by spaces.
Tokens Tokenize(std::string_view text);

// Whitespace split only.
Tokens SplitWhitespace(std::string_view text);

// Splits on a single character, keeping empty fields.
std::vector<std::string> SplitFields(std::string_view line, char sep);

std::string Join(const Tokens &tokens, std::string_view sep = " ");

// ASCII lowercase; other bytes are left alone.
std::string Lowercase(std::string_view s);
Tokens Lowercase(const Tokens &tokens);

std::string Trim(std::string_view s);

}  // namespace nreg

#endif  // NREG_CORPUS_TEXT_H_

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

#include "nreg/corpus/text.h"

#include <cctype>

namespace nreg {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool IsEdgePunct(char c) {
  switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?':
    case '"': case '(': case ')': case '[': case ']':
      return true;
    default:
      return false;
  }
}

void SplitChunk(std::string_view chunk, Tokens &out) {
  std::size_t begin = 0, end = chunk.size();
  Tokens leading;
  while (begin < end && IsEdgePunct(chunk[begin])) {
    leading.emplace_back(1, chunk[begin]);
    ++begin;
  }
  Tokens trailing;
  while (end > begin && IsEdgePunct(chunk[end - 1])) {
    trailing.emplace_back(1, chunk[end - 1]);
    --end;
  }
  out.insert(out.end(), leading.begin(), leading.end());
  std::string_view core = chunk.substr(begin, end - begin);
  if (core.size() > 2 && (core.ends_with("'s") || core.ends_with("'S"))) {
    out.emplace_back(core.substr(0, core.size() - 2));
    out.emplace_back(core.substr(core.size() - 2));
  } else if (!core.empty()) {
    out.emplace_back(core);
  }
  out.insert(out.end(), trailing.rbegin(), trailing.rend());
}

}  // namespace

Tokens SplitWhitespace(std::string_view text) {
  Tokens out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !IsSpace(text[j])) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

Tokens Tokenize(std::string_view text) {
  Tokens out;
  for (const std::string &chunk : SplitWhitespace(text)) SplitChunk(chunk, out);
  return out;
}

std::vector<std::string> SplitFields(std::string_view line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      return fields;
    }
    fields.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string Join(const Tokens &tokens, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += sep;
    out += tokens[i];
  }
  return out;
}

std::string Lowercase(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

Tokens Lowercase(const Tokens &tokens) {
  Tokens out;
  out.reserve(tokens.size());
  for (const auto &t : tokens) out.push_back(Lowercase(t));
  return out;
}

std::string Trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && IsSpace(s[b])) ++b;
  while (e > b && IsSpace(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace nreg

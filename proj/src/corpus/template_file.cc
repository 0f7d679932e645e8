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

#include "nreg/corpus/template_file.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "nreg/error.h"

namespace nreg {
namespace {

struct Paragraph {
  int line = 0;
  std::vector<std::string> lines;
};

std::vector<Paragraph> ReadParagraphs(std::istream &in) {
  std::vector<Paragraph> out;
  Paragraph current;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) {
      if (!current.lines.empty()) out.push_back(std::move(current));
      current = Paragraph{};
      continue;
    }
    if (current.lines.empty()) current.line = line_no;
    current.lines.push_back(line);
  }
  if (!current.lines.empty()) out.push_back(std::move(current));
  return out;
}

std::string Where(int line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

std::vector<TemplateEntry> ParseTemplateFile(std::istream &in) {
  std::vector<Paragraph> paragraphs = ReadParagraphs(in);
  if (paragraphs.empty()) throw FormatError("template file holds no blocks");
  if (paragraphs.size() % 3 != 0) {
    throw FormatError(Where(paragraphs.back().line) +
                      "incomplete block: expected triples, tag map and text paragraphs");
  }
  std::vector<TemplateEntry> entries;
  for (std::size_t p = 0; p < paragraphs.size(); p += 3) {
    TemplateEntry entry;
    char id[32];
    std::snprintf(id, sizeof(id), "t%04zu", p / 3 + 1);
    entry.text_id = id;
    entry.line = paragraphs[p].line;

    for (std::size_t k = 0; k < paragraphs[p].lines.size(); ++k) {
      auto fields = SplitFields(paragraphs[p].lines[k], '\t');
      const int line = paragraphs[p].line + static_cast<int>(k);
      if (fields.size() != 3) throw FormatError(Where(line) + "triple needs 3 tab-separated fields");
      Triple t{Trim(fields[0]), Trim(fields[1]), Trim(fields[2])};
      if (t.subject.empty() || t.predicate.empty() || t.object.empty()) {
        throw FormatError(Where(line) + "empty triple field");
      }
      if (IsConstant(t.subject)) throw FormatError(Where(line) + "subject is a constant");
      entry.triples.push_back(std::move(t));
    }

    const Paragraph &tags = paragraphs[p + 1];
    for (std::size_t k = 0; k < tags.lines.size(); ++k) {
      auto fields = SplitFields(tags.lines[k], '\t');
      const int line = tags.line + static_cast<int>(k);
      if (fields.size() != 2) throw FormatError(Where(line) + "tag map needs TAG<TAB>ID");
      std::string tag = Trim(fields[0]);
      if (!IsRoleTag(tag)) throw FormatError(Where(line) + "not a role tag: " + tag);
      try {
        entry.map.Add(tag, Trim(fields[1]));
      } catch (const ContractError &e) {
        throw FormatError(Where(line) + e.what());
      }
    }

    const Paragraph &text = paragraphs[p + 2];
    if (text.lines.size() != 2) {
      throw FormatError(Where(text.line) + "expected a template line and an original line");
    }
    entry.template_tokens = Tokenize(text.lines[0]);
    entry.original_tokens = Tokenize(text.lines[1]);
    for (const auto &tok : entry.template_tokens) {
      if (IsRoleTag(tok) && !entry.map.Contains(tok)) {
        throw FormatError(Where(text.line) + "tag " + tok + " missing from the tag map");
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<TemplateEntry> ParseTemplateFileAt(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return ParseTemplateFile(in);
}

void WriteTemplateFile(std::ostream &out, const std::vector<TemplateEntry> &entries) {
  bool first = true;
  for (const auto &e : entries) {
    if (!first) out << '\n';
    first = false;
    for (const auto &t : e.triples) out << t.subject << '\t' << t.predicate << '\t' << t.object << '\n';
    out << '\n';
    for (const auto &[tag, id] : e.map.entries()) out << tag << '\t' << id << '\n';
    out << '\n' << Join(e.template_tokens) << '\n' << Join(e.original_tokens) << '\n';
  }
}

std::vector<RefexInstance> BuildInstances(const TemplateEntry &entry) {
  std::vector<ExtractedRefex> refexes =
      ExtractRefexes(entry.original_tokens, entry.template_tokens, entry.map);
  std::vector<RefexInstance> out;
  out.reserve(refexes.size());
  for (std::size_t k = 0; k < refexes.size(); ++k) {
    RefexInstance inst;
    inst.text_id = entry.text_id;
    inst.occurrence = static_cast<int>(k);
    inst.entity = *entry.map.Find(refexes[k].tag);
    auto [pre, pos] = BuildContexts(entry.template_tokens, inst.occurrence, entry.map);
    inst.pre_context = std::move(pre);
    inst.pos_context = std::move(pos);
    inst.refex = std::move(refexes[k].tokens);
    inst.form = ClassifyForm(inst.refex);
    out.push_back(std::move(inst));
  }
  return out;
}

CorpusInstances BuildCorpus(const std::vector<TemplateEntry> &entries) {
  CorpusInstances corpus;
  for (const auto &entry : entries) {
    try {
      std::vector<RefexInstance> all = BuildInstances(entry);
      const std::size_t before = all.size();
      std::vector<RefexInstance> wiki = FilterWiki(std::move(all));
      corpus.constants_dropped += before - wiki.size();
      for (auto &inst : wiki) corpus.instances.push_back(std::move(inst));
    } catch (const AlignmentError &e) {
      corpus.failures.push_back({entry.text_id, entry.line, e.what()});
    }
  }
  return corpus;
}

}  // namespace nreg

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

#ifndef NREG_CORPUS_TEMPLATE_FILE_H_
#define NREG_CORPUS_TEMPLATE_FILE_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "nreg/corpus/alignment.h"
#include "nreg/corpus/entities.h"
#include "nreg/corpus/instance.h"

namespace nreg {

// One text of a template file.
struct TemplateEntry {
  std::string text_id;  // "t0001", "t0002", ... in file order
  int line = 0;         // first line of the block
  std::vector<Triple> triples;
  EntityTagMap map;
  Tokens template_tokens;
  Tokens original_tokens;
};

// A template file is a sequence of blank-line separated paragraphs taken three
// at a time: triples ("s<TAB>p<TAB>o"), tag map ("TAG<TAB>ID"), and a pair of
// lines holding the template and the original text. Both lines are run
// through Tokenize. Throws FormatError naming the line on malformed input
// and on a file without blocks.
std::vector<TemplateEntry> ParseTemplateFile(std::istream &in);
std::vector<TemplateEntry> ParseTemplateFileAt(const std::string &path);

void WriteTemplateFile(std::ostream &out, const std::vector<TemplateEntry> &entries);

// All references of one text, constants included, one per tag occurrence.
// Throws AlignmentError when the template and text do not align.
std::vector<RefexInstance> BuildInstances(const TemplateEntry &entry);

struct PrepareFailure {
  std::string text_id;
  int line = 0;
  std::string message;
};

struct CorpusInstances {
  std::vector<RefexInstance> instances;  // Wikipedia entities only
  std::vector<PrepareFailure> failures;
  std::size_t constants_dropped = 0;
};

// BuildInstances over every entry followed by FilterWiki. Failing texts are
// collected, not thrown.
CorpusInstances BuildCorpus(const std::vector<TemplateEntry> &entries);

}  // namespace nreg

#endif  // NREG_CORPUS_TEMPLATE_FILE_H_

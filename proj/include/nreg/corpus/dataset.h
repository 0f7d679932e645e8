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

#ifndef NREG_CORPUS_DATASET_H_
#define NREG_CORPUS_DATASET_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nreg/corpus/instance.h"

namespace nreg {

struct SplitRatios {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
};

struct DatasetSplit {
  std::vector<RefexInstance> train, dev, test;
  std::vector<std::string> train_texts, dev_texts, test_texts;
};

// Splits by text (no text spans two splits). Shuffles the texts with `seed`
// and gives floor(ratio * #texts) texts to dev and test; train takes the
// remainder. Instances keep their input order within
// a split. Throws ConfigError when the ratios are negative or do not sum
// to 1.
DatasetSplit SplitDataset(const std::vector<RefexInstance> &instances, SplitRatios ratios,
                          std::uint64_t seed);

// Text IDs per split followed by counts.
void WriteSplitManifest(std::ostream &out, const DatasetSplit &split);

// Instance TSV. Columns: entity, pre_context, pos_context, refex, form,
// syntactic_position, text_status, sentence_status, and optionally text_id,
// occurrence. Missing features are written as "-".
void WriteInstance(std::ostream &out, const RefexInstance &inst);
void WriteInstances(std::ostream &out, const std::vector<RefexInstance> &instances);

// Parses rows written by WriteInstances. Rows without a text_id get
// "row<N>" (1-based line number). Throws
// FormatError naming the line on malformed rows.
std::vector<RefexInstance> ReadInstances(std::istream &in);
std::vector<RefexInstance> ReadInstancesFile(const std::string &path);

}  // namespace nreg

#endif  // NREG_CORPUS_DATASET_H_

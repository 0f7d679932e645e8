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

#include "nreg/corpus/alignment.h"

#include <algorithm>

namespace nreg {

std::vector<ExtractedRefex> ExtractRefexes(const Tokens &original, const Tokens &template_tokens,
                                           const EntityTagMap &map) {
  const std::size_t n = template_tokens.size(), m = original.size();
  std::vector<char> is_tag(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (map.Contains(template_tokens[i])) {
      is_tag[i] = 1;
    } else if (IsRoleTag(template_tokens[i])) {
      throw AlignmentError("tag " + template_tokens[i] + " missing from the entity map",
                           template_tokens, original);
    }
  }

  // lcs[i][j]: LCS length of template[i:] and original[j:].
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      if (!is_tag[i] && template_tokens[i] == original[j]) {
        lcs[i][j] = lcs[i + 1][j + 1] + 1;
      } else {
        lcs[i][j] = std::max(lcs[i + 1][j], lcs[i][j + 1]);
      }
    }
  }

  std::vector<ExtractedRefex> out;
  std::vector<std::size_t> gap_template;
  Tokens gap_original;
  auto close_gap = [&]() {
    if (gap_template.empty() && gap_original.empty()) return;
    if (gap_template.size() == 1 && is_tag[gap_template[0]] && !gap_original.empty()) {
      out.push_back({template_tokens[gap_template[0]], gap_original});
    } else {
      std::string what = "cannot align gap: template [";
      for (std::size_t k = 0; k < gap_template.size(); ++k) {
        if (k > 0) what += " ";
        what += template_tokens[gap_template[k]];
      }
      what += "] vs original [" + Join(gap_original) + "]";
      throw AlignmentError(what, template_tokens, original);
    }
    gap_template.clear();
    gap_original.clear();
  };

  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && !is_tag[i] && template_tokens[i] == original[j] &&
        lcs[i][j] == lcs[i + 1][j + 1] + 1) {
      close_gap();
      ++i;
      ++j;
    } else if (i < n && (j == m || lcs[i + 1][j] == lcs[i][j])) {
      gap_template.push_back(i++);
    } else {
      gap_original.push_back(original[j++]);
    }
  }
  close_gap();
  return out;
}

}  // namespace nreg

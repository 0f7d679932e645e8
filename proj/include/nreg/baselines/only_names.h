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

#ifndef NREG_BASELINES_ONLY_NAMES_H_
#define NREG_BASELINES_ONLY_NAMES_H_

#include <string>
#include <string_view>

#include "nreg/corpus/text.h"

namespace nreg {

// "Appleton_International_Airport" -> "Appleton International Airport".
std::string OnlyNames(std::string_view wiki_id);

// OnlyNames split into tokens.
Tokens OnlyNamesTokens(std::string_view wiki_id);

}  // namespace nreg

#endif  // NREG_BASELINES_ONLY_NAMES_H_

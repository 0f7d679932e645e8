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

#ifndef NREG_TESTING_FIXTURES_H_
#define NREG_TESTING_FIXTURES_H_

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace nreg::testing {

inline std::string FixturePath(const std::string &name) {
  const char *dir = std::getenv("NREG_TEST_DATA");
  return std::string(dir != nullptr ? dir : NREG_FIXTURE_DIR) + "/" + name;
}

inline std::string ReadFixture(const std::string &name) {
  std::ifstream in(FixturePath(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace nreg::testing

#endif  // NREG_TESTING_FIXTURES_H_

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

#ifndef NREG_CLI_MANIFEST_H_
#define NREG_CLI_MANIFEST_H_

#include <chrono>
#include <string>
#include <string_view>

#include "json.hpp"

namespace nreg::cli {

// Lowercase hex SHA-256.
std::string Sha256(std::string_view data);
// Throws Error when the file cannot be read.
std::string Sha256File(const std::string &path);

// Record of one command run: configuration, tool version, wall-clock time
// and the digest of every input and output file.
class RunManifest {
 public:
  explicit RunManifest(std::string command);

  void AddInput(const std::string &path);
  void AddOutput(const std::string &path);
  // Free-form fields ("config", "seed", "fallbacks", ...).
  nlohmann::ordered_json &operator[](const std::string &key) { return json_[key]; }

  const nlohmann::ordered_json &json() const { return json_; }

  // Stamps the elapsed time and writes pretty-printed JSON.
  void Write(const std::string &path);

 private:
  nlohmann::ordered_json json_;
  std::chrono::steady_clock::time_point start_;
};

// Output digests of a manifest file as "file-name sha256" lines. Directories
// are dropped.
std::string OutputDigests(const std::string &manifest_path);

}  // namespace nreg::cli

#endif  // NREG_CLI_MANIFEST_H_

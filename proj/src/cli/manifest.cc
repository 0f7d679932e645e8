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

#include "nreg/cli/manifest.h"

#include <openssl/evp.h>

#include <array>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "nreg/error.h"

#ifndef NREG_VERSION
#define NREG_VERSION "unknown"
#endif

namespace nreg::cli {
namespace {

class Sha256Context {
 public:
  Sha256Context() : ctx_(EVP_MD_CTX_new(), EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw Error("SHA-256 initialization failed");
    }
  }
  void Update(const char *data, std::size_t n) {
    if (EVP_DigestUpdate(ctx_.get(), data, n) != 1) throw Error("SHA-256 update failed");
  }
  std::string HexDigest() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_.get(), md.data(), &len) != 1) throw Error("SHA-256 final failed");
    static const char *hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out += hex[md[i] >> 4];
      out += hex[md[i] & 15];
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

nlohmann::ordered_json FileEntry(const std::string &path) {
  return {{"path", path}, {"sha256", Sha256File(path)}};
}

}  // namespace

std::string Sha256(std::string_view data) {
  Sha256Context ctx;
  ctx.Update(data.data(), data.size());
  return ctx.HexDigest();
}

std::string Sha256File(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  Sha256Context ctx;
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    ctx.Update(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  return ctx.HexDigest();
}

RunManifest::RunManifest(std::string command) : start_(std::chrono::steady_clock::now()) {
  json_["tool"] = "nreg";
  json_["version"] = NREG_VERSION;
  json_["command"] = std::move(command);
  json_["inputs"] = nlohmann::ordered_json::array();
  json_["outputs"] = nlohmann::ordered_json::array();
}

void RunManifest::AddInput(const std::string &path) { json_["inputs"].push_back(FileEntry(path)); }

void RunManifest::AddOutput(const std::string &path) {
  json_["outputs"].push_back(FileEntry(path));
}

void RunManifest::Write(const std::string &path) {
  json_["wall_clock_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  std::ofstream out(path);
  out << json_.dump(2) << '\n';
  if (!out) throw Error("cannot write " + path);
}

std::string OutputDigests(const std::string &manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw Error("cannot read " + manifest_path);
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw FormatError(manifest_path + ": " + e.what());
  }
  std::ostringstream out;
  for (const auto &o : j.at("outputs")) {
    const std::filesystem::path file = o.at("path").get<std::string>();
    out << file.filename().string() << ' ' << o.at("sha256").get<std::string>() << '\n';
  }
  return out.str();
}

}  // namespace nreg::cli

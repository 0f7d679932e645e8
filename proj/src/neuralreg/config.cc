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

#include "nreg/neuralreg/config.h"

#include <charconv>
#include <cmath>

#include "json.hpp"
#include "nreg/corpus/text.h"
#include "nreg/error.h"

namespace nreg {
namespace {

template <typename N>
N ParseNumber(std::string_view key, std::string_view text) {
  std::string s = Trim(text);
  N value{};
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw ConfigError("bad value '" + s + "' for " + std::string(key));
  }
  return value;
}

}  // namespace

std::string_view VariantName(DecoderVariant v) {
  switch (v) {
    case DecoderVariant::kSeq2Seq: return "seq2seq";
    case DecoderVariant::kCAtt: return "catt";
    case DecoderVariant::kHierAtt: return "hieratt";
  }
  return "catt";
}

DecoderVariant ParseVariant(std::string_view name) {
  for (auto v : {DecoderVariant::kSeq2Seq, DecoderVariant::kCAtt, DecoderVariant::kHierAtt}) {
    if (VariantName(v) == name) return v;
  }
  throw ConfigError("unknown decoder variant '" + std::string(name) + "'");
}

int ModelConfig::context_dim() const {
  return variant == DecoderVariant::kHierAtt ? annotation_dim() : 2 * annotation_dim();
}

void ModelConfig::Validate() const {
  auto positive = [](const char *name, double v) {
    if (!(v > 0)) throw ConfigError(std::string(name) + " must be positive");
  };
  positive("embedding_dim", embedding_dim);
  positive("hidden_dim", hidden_dim);
  if (decoder_dim < 0) throw ConfigError("decoder_dim must be >= 0");
  if (attention_dim < 0) throw ConfigError("attention_dim must be >= 0");
  if (!(dropout >= 0 && dropout < 1)) throw ConfigError("dropout must be in [0, 1)");
  positive("beam_size", beam_size);
  positive("max_len", max_len);
  positive("eos_stop_count", eos_stop_count);
  if (!(length_norm_alpha >= 0)) throw ConfigError("length_norm_alpha must be >= 0");
  positive("batch_size", batch_size);
  positive("max_epochs", max_epochs);
  if (patience < 0) throw ConfigError("patience must be >= 0");
  if (!(clip_norm >= 0)) throw ConfigError("clip_norm must be >= 0");
  if (!(adadelta_rho > 0 && adadelta_rho < 1)) throw ConfigError("adadelta_rho must be in (0, 1)");
  positive("adadelta_eps", adadelta_eps);
  if (!(target_dev_accuracy >= 0 && target_dev_accuracy <= 1)) {
    throw ConfigError("target_dev_accuracy must be in [0, 1]");
  }
  positive("min_freq", min_freq);
}

void ModelConfig::Set(std::string_view key, std::string_view value) {
  auto as_int = [&] { return ParseNumber<int>(key, value); };
  auto as_double = [&] { return ParseNumber<double>(key, value); };
  if (key == "embedding_dim") embedding_dim = as_int();
  else if (key == "hidden_dim") hidden_dim = as_int();
  else if (key == "decoder_dim") decoder_dim = as_int();
  else if (key == "attention_dim") attention_dim = as_int();
  else if (key == "dropout") dropout = as_double();
  else if (key == "beam_size" || key == "beam") beam_size = as_int();
  else if (key == "max_len") max_len = as_int();
  else if (key == "eos_stop_count") eos_stop_count = as_int();
  else if (key == "length_norm_alpha") length_norm_alpha = as_double();
  else if (key == "batch_size") batch_size = as_int();
  else if (key == "max_epochs") max_epochs = as_int();
  else if (key == "patience") patience = as_int();
  else if (key == "variant") variant = ParseVariant(Trim(value));
  else if (key == "seed") seed = ParseNumber<std::uint64_t>(key, value);
  else if (key == "clip_norm") clip_norm = as_double();
  else if (key == "adadelta_rho") adadelta_rho = as_double();
  else if (key == "adadelta_eps") adadelta_eps = as_double();
  else if (key == "target_dev_accuracy") target_dev_accuracy = as_double();
  else if (key == "min_freq") min_freq = as_int();
  else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

std::vector<std::pair<std::string, std::string>> ModelConfig::ParseKeyValues(
    std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string trimmed = Trim(line);
    if (trimmed.empty()) continue;
    auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    out.emplace_back(Trim(trimmed.substr(0, eq)), Trim(trimmed.substr(eq + 1)));
  }
  return out;
}

std::string ModelConfig::ToJson() const {
  nlohmann::ordered_json j;
  j["embedding_dim"] = embedding_dim;
  j["hidden_dim"] = hidden_dim;
  j["decoder_dim"] = decoder_dim;
  j["attention_dim"] = attention_dim;
  j["dropout"] = dropout;
  j["beam_size"] = beam_size;
  j["max_len"] = max_len;
  j["eos_stop_count"] = eos_stop_count;
  j["length_norm_alpha"] = length_norm_alpha;
  j["batch_size"] = batch_size;
  j["max_epochs"] = max_epochs;
  j["patience"] = patience;
  j["variant"] = std::string(VariantName(variant));
  j["seed"] = seed;
  j["clip_norm"] = clip_norm;
  j["adadelta_rho"] = adadelta_rho;
  j["adadelta_eps"] = adadelta_eps;
  j["target_dev_accuracy"] = target_dev_accuracy;
  j["min_freq"] = min_freq;
  return j.dump();
}

ModelConfig ModelConfig::FromJson(std::string_view json) {
  ModelConfig c;
  try {
    auto j = nlohmann::json::parse(json);
    c.embedding_dim = j.at("embedding_dim").get<int>();
    c.hidden_dim = j.at("hidden_dim").get<int>();
    c.decoder_dim = j.at("decoder_dim").get<int>();
    c.attention_dim = j.at("attention_dim").get<int>();
    c.dropout = j.at("dropout").get<double>();
    c.beam_size = j.at("beam_size").get<int>();
    c.max_len = j.at("max_len").get<int>();
    c.eos_stop_count = j.at("eos_stop_count").get<int>();
    c.length_norm_alpha = j.at("length_norm_alpha").get<double>();
    c.batch_size = j.at("batch_size").get<int>();
    c.max_epochs = j.at("max_epochs").get<int>();
    c.patience = j.at("patience").get<int>();
    c.variant = ParseVariant(j.at("variant").get<std::string>());
    c.seed = j.at("seed").get<std::uint64_t>();
    c.clip_norm = j.at("clip_norm").get<double>();
    c.adadelta_rho = j.at("adadelta_rho").get<double>();
    c.adadelta_eps = j.at("adadelta_eps").get<double>();
    c.target_dev_accuracy = j.value("target_dev_accuracy", 0.0);
    c.min_freq = j.value("min_freq", 1);
  } catch (const nlohmann::json::exception &e) {
    throw FormatError(std::string("bad model config: ") + e.what());
  }
  c.Validate();
  return c;
}

}  // namespace nreg

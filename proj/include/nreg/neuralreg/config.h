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

#ifndef NREG_NEURALREG_CONFIG_H_
#define NREG_NEURALREG_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nreg {

enum class DecoderVariant { kSeq2Seq, kCAtt, kHierAtt };

std::string_view VariantName(DecoderVariant v);
// Throws ConfigError on unknown names.
DecoderVariant ParseVariant(std::string_view name);

struct ModelConfig {
  int embedding_dim = 300;
  int hidden_dim = 512;     // per encoder direction
  int decoder_dim = 0;      // 0: 2 * hidden_dim
  int attention_dim = 0;    // 0: hidden_dim
  double dropout = 0.2;
  int beam_size = 5;
  int max_len = 30;
  int eos_stop_count = 2;
  double length_norm_alpha = 0.6;
  int batch_size = 40;
  int max_epochs = 60;
  int patience = 20;
  DecoderVariant variant = DecoderVariant::kCAtt;
  std::uint64_t seed = 1;
  double clip_norm = 5.0;   // 0 disables clipping
  double adadelta_rho = 0.95;
  double adadelta_eps = 1e-6;
  double target_dev_accuracy = 0.0;  // > 0: stop once reached
  int min_freq = 1;

  int annotation_dim() const { return 2 * hidden_dim; }
  int dec_dim() const { return decoder_dim > 0 ? decoder_dim : 2 * hidden_dim; }
  int att_dim() const { return attention_dim > 0 ? attention_dim : hidden_dim; }
  // Width of the context vector fed to the decoder.
  int context_dim() const;

  // Throws ConfigError naming the offending field.
  void Validate() const;

  // Sets one field from its textual value, e.g. ("hidden_dim", "32").
  // Throws ConfigError on unknown keys or unparsable values.
  void Set(std::string_view key, std::string_view value);

  // key=value lines; '#' starts a comment.
  static std::vector<std::pair<std::string, std::string>> ParseKeyValues(std::string_view text);

  std::string ToJson() const;
  static ModelConfig FromJson(std::string_view json);

  bool operator==(const ModelConfig &) const = default;
};

}  // namespace nreg

#endif  // NREG_NEURALREG_CONFIG_H_

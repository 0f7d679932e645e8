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

#ifndef NREG_ERROR_H_
#define NREG_ERROR_H_

#include <stdexcept>
#include <string>

namespace nreg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tensor shapes that do not fit the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Token or entity outside a vocabulary.
class VocabularyError : public Error {
 public:
  using Error::Error;
};

// Invalid hyperparameters or run settings.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Violated precondition on an API call.
class ContractError : public Error {
 public:
  using Error::Error;
};

// NaN/Inf produced where finite values are required.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Malformed input files.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace nreg

#endif  // NREG_ERROR_H_

// Copyright 2026 The Pentolab Authors. All Rights Reserved.
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

#ifndef PENTOLAB_ERRORS_H_
#define PENTOLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pentolab {

// Base of every error raised by the library. The CLI maps subclasses onto
// process exit codes (see tools/pentolab.cc).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input values: bad configs, unknown factor values, clipping.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A value is not present in a factor's value list.
class UnknownValue : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Checksums or cross-file references do not line up.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pentolab

#endif  // PENTOLAB_ERRORS_H_

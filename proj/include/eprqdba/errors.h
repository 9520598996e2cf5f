// Copyright 2026 The EPRQDBA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EPRQDBA_ERRORS_H
#define EPRQDBA_ERRORS_H

#include <stdexcept>
#include <string>

namespace eprqdba {

/// Invalid protocol parameters (n, m, tolerance policy).
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string &what) : std::invalid_argument(what) {}
};

/// Malformed input data: shape mismatches, non-normalized states, bad encodings.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string &what) : std::invalid_argument(what) {}
};

/// An operation called with arguments outside its contract (index out of range, i == j).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string &what) : std::invalid_argument(what) {}
};

/// A round-structure violation: sending after a round closed, self-addressed messages.
class ProtocolViolation : public std::runtime_error {
 public:
  explicit ProtocolViolation(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace eprqdba

#endif  // EPRQDBA_ERRORS_H

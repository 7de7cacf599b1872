// Copyright 2026 The Brandcap Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brandcap {

enum class ErrorKind {
  // Input and domain validation.
  kUnknownPersonality,
  kEmptyDescription,
  kMalformedAttribute,
  kShotsOutOfRange,
  kShotCountMismatch,
  kNotEnoughExamples,
  kPreconditionViolation,
  kUnknownBrand,
  kInsufficientTestRecords,
  kSchemaError,
  kImageNotFound,
  // An input file named by the caller does not exist or cannot be read.
  kInputNotFound,
  // Metric preconditions.
  kDimensionMismatch,
  kZeroVector,
  kEmptyMatrix,
  kShapeMismatch,
  kAllUnparseable,
  // Provider and environment failures.
  kProviderUnavailable,
  kAuthError,
  kMalformedResponse,
  kRequestRejected,
  kEmptyCompletion,
  kIoError,
};

std::string_view error_kind_name(ErrorKind kind);

// True for failures caused by a remote endpoint or the environment rather
// than by caller input. The CLI maps these to exit code 2.
bool is_provider_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace brandcap

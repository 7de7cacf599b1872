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

#include "brandcap/core/error.h"

namespace brandcap {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownPersonality: return "UnknownPersonality";
    case ErrorKind::kEmptyDescription: return "EmptyDescription";
    case ErrorKind::kMalformedAttribute: return "MalformedAttribute";
    case ErrorKind::kShotsOutOfRange: return "ShotsOutOfRange";
    case ErrorKind::kShotCountMismatch: return "ShotCountMismatch";
    case ErrorKind::kNotEnoughExamples: return "NotEnoughExamples";
    case ErrorKind::kPreconditionViolation: return "PreconditionViolation";
    case ErrorKind::kUnknownBrand: return "UnknownBrand";
    case ErrorKind::kInsufficientTestRecords: return "InsufficientTestRecords";
    case ErrorKind::kSchemaError: return "SchemaError";
    case ErrorKind::kImageNotFound: return "ImageNotFound";
    case ErrorKind::kInputNotFound: return "InputNotFound";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kZeroVector: return "ZeroVector";
    case ErrorKind::kEmptyMatrix: return "EmptyMatrix";
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kAllUnparseable: return "AllUnparseable";
    case ErrorKind::kProviderUnavailable: return "ProviderUnavailable";
    case ErrorKind::kAuthError: return "AuthError";
    case ErrorKind::kMalformedResponse: return "MalformedResponse";
    case ErrorKind::kRequestRejected: return "RequestRejected";
    case ErrorKind::kEmptyCompletion: return "EmptyCompletion";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Unknown";
}

bool is_provider_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kProviderUnavailable:
    case ErrorKind::kAuthError:
    case ErrorKind::kMalformedResponse:
    case ErrorKind::kRequestRejected:
    case ErrorKind::kEmptyCompletion:
    case ErrorKind::kIoError:
      return true;
    default:
      return false;
  }
}

void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(error_kind_name(kind)) + ": " + message);
}

}  // namespace brandcap

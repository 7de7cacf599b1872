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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brandcap/core/attributes.h"
#include "brandcap/core/personality.h"

namespace brandcap {

// How absent attribute kinds are rendered: Selective omits them,
// NonSelective lists them with the value "None.".
enum class PromptVariant {
  kSelective,
  kNonSelective,
};

std::string_view variant_name(PromptVariant v);  // "selective" / "non-selective"
// Accepts "selective", "non-selective", "nonselective", "non_selective"
// (case-insensitive). Throws Error(kPreconditionViolation) otherwise.
PromptVariant variant_from_string(std::string_view s);

inline constexpr int kMaxShots = 4;

struct CaptionRequest {
  std::string description;
  Personality personality = Personality::kSincerity;
  AttributeSet attributes;
  PromptVariant variant = PromptVariant::kSelective;
  int shots = 0;
  std::string model_id;
  // Optional caller-assigned identifier, echoed into outputs.
  std::string id;

  friend bool operator==(const CaptionRequest&, const CaptionRequest&) = default;
};

// A CaptionRequest that passed validate_request. Only validate_request can
// construct one, so holding a ValidatedRequest proves the invariants hold.
class ValidatedRequest {
 public:
  const CaptionRequest& get() const { return request_; }
  const CaptionRequest* operator->() const { return &request_; }

 private:
  explicit ValidatedRequest(CaptionRequest r) : request_(std::move(r)) {}
  friend ValidatedRequest validate_request(const CaptionRequest& r);

  CaptionRequest request_;
};

// Checks every CaptionRequest invariant and normalizes the attribute lists:
// values are trimmed and deduplicated case-insensitively keeping the first
// occurrence. The description is trimmed. Idempotent.
//
// Errors: kEmptyDescription, kMalformedAttribute, kShotsOutOfRange.
ValidatedRequest validate_request(const CaptionRequest& r);

// Trims and case-insensitively deduplicates, keeping first-seen order.
std::vector<std::string> normalize_values(const std::vector<std::string>& values);

}  // namespace brandcap

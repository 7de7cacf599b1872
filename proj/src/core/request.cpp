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

#include "brandcap/core/request.h"

#include <unordered_set>

#include "brandcap/core/error.h"
#include "brandcap/core/strings.h"

namespace brandcap {

std::string_view variant_name(PromptVariant v) {
  return v == PromptVariant::kSelective ? "selective" : "non-selective";
}

PromptVariant variant_from_string(std::string_view s) {
  const std::string v = ascii_lower(trim(s));
  if (v == "selective") return PromptVariant::kSelective;
  if (v == "non-selective" || v == "nonselective" || v == "non_selective") {
    return PromptVariant::kNonSelective;
  }
  raise(ErrorKind::kPreconditionViolation,
        "variant must be 'selective' or 'non-selective', got '" + std::string(s) + "'");
}

std::vector<std::string> normalize_values(const std::vector<std::string>& values) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const std::string& raw : values) {
    std::string v(trim(raw));
    if (seen.insert(ascii_lower(v)).second) out.push_back(std::move(v));
  }
  return out;
}

ValidatedRequest validate_request(const CaptionRequest& r) {
  CaptionRequest out = r;
  out.description = std::string(trim(r.description));
  if (out.description.empty()) {
    raise(ErrorKind::kEmptyDescription, "description is empty");
  }
  if (r.shots < 0 || r.shots > kMaxShots) {
    raise(ErrorKind::kShotsOutOfRange,
          "shots must be within 0..4, got " + std::to_string(r.shots));
  }
  for (AttributeKind kind : kPromptAttributeOrder) {
    std::vector<std::string>& values = out.attributes.of(kind);
    values = normalize_values(values);
    for (const std::string& v : values) {
      bool ok = false;
      switch (kind) {
        case AttributeKind::kHashtags: ok = is_valid_hashtag(v); break;
        case AttributeKind::kUsernames: ok = is_valid_username(v); break;
        case AttributeKind::kLinks: ok = is_valid_url(v); break;
        case AttributeKind::kNamedEntities: ok = !v.empty(); break;
      }
      if (!ok) {
        raise(ErrorKind::kMalformedAttribute,
              std::string(diagnostic_name(kind)) + " '" + v + "' is malformed");
      }
    }
  }
  return ValidatedRequest(std::move(out));
}

}  // namespace brandcap

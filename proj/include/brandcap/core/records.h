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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "brandcap/core/personality.h"
#include "brandcap/core/request.h"

namespace brandcap {

struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  // Strict "YYYY-MM-DD". Throws Error(kSchemaError) on malformed input.
  static Date parse(std::string_view s);
  static Date from_unix_seconds(std::int64_t seconds);
  std::string to_string() const;

  friend bool operator==(const Date&, const Date&) = default;
};

// One ingested social post.
struct PostRecord {
  std::string id;
  std::string brand;
  Personality personality = Personality::kSincerity;
  std::optional<std::string> image_ref;
  std::string caption;
  Date collected_at;
  // Stored one-line image description, when the export already carries one.
  std::optional<std::string> description;

  friend bool operator==(const PostRecord&, const PostRecord&) = default;
};

struct GeneratedCaption {
  // Final caption: emojize(raw_model_output).
  std::string text;
  CaptionRequest request;
  std::string raw_model_output;
  std::int64_t provider_latency_ms = 0;
  bool cached = false;
  // Part-1 description (image caption or the user-supplied line).
  std::string primary_caption;
  std::optional<std::string> image_ref;
  bool tonality_clean = true;
  int regenerations = 0;

  friend bool operator==(const GeneratedCaption&, const GeneratedCaption&) = default;
};

}  // namespace brandcap

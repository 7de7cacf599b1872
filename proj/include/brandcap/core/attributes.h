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

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace brandcap {

// The four injectable attribute kinds, in the canonical prompt order.
enum class AttributeKind {
  kNamedEntities = 0,
  kLinks = 1,
  kHashtags = 2,
  kUsernames = 3,
};

inline constexpr std::array<AttributeKind, 4> kPromptAttributeOrder = {
    AttributeKind::kNamedEntities, AttributeKind::kLinks, AttributeKind::kHashtags,
    AttributeKind::kUsernames};

// Column order of the coverage section of an evaluation report.
inline constexpr std::array<AttributeKind, 4> kReportAttributeOrder = {
    AttributeKind::kHashtags, AttributeKind::kNamedEntities, AttributeKind::kUsernames,
    AttributeKind::kLinks};

// Prompt label ("Named Entities", "Links", "Hashtags", "Usernames").
std::string_view prompt_label(AttributeKind kind);
// Lowercase plural used in instruction sentences ("named entities", "links", ...).
std::string_view prompt_noun(AttributeKind kind);
// Report/JSON key ("entities", "urls", "hashtags", "usernames").
std::string_view report_key(AttributeKind kind);
// Singular name used in validation diagnostics ("named_entity", "url", ...).
std::string_view diagnostic_name(AttributeKind kind);

struct AttributeSet {
  std::vector<std::string> hashtags;
  std::vector<std::string> usernames;
  std::vector<std::string> urls;
  std::vector<std::string> named_entities;

  const std::vector<std::string>& of(AttributeKind kind) const;
  std::vector<std::string>& of(AttributeKind kind);

  bool empty() const;
  // Number of kinds with at least one value.
  int kinds_present() const;

  friend bool operator==(const AttributeSet&, const AttributeSet&) = default;
};

// '#' followed by one or more letters, digits or underscores.
bool is_valid_hashtag(std::string_view s);
// '@' followed by one or more letters, digits, underscores or periods.
bool is_valid_username(std::string_view s);
// http://, https:// or www. prefix, at least one more character, no whitespace.
bool is_valid_url(std::string_view s);

bool is_hashtag_char(char32_t cp);
bool is_username_char(char32_t cp);

}  // namespace brandcap

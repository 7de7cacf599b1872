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

#include "brandcap/core/attributes.h"

#include <utility>

#include "brandcap/core/strings.h"

namespace brandcap {

std::string_view prompt_label(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::kNamedEntities: return "Named Entities";
    case AttributeKind::kLinks: return "Links";
    case AttributeKind::kHashtags: return "Hashtags";
    case AttributeKind::kUsernames: return "Usernames";
  }
  return "";
}

std::string_view prompt_noun(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::kNamedEntities: return "named entities";
    case AttributeKind::kLinks: return "links";
    case AttributeKind::kHashtags: return "hashtags";
    case AttributeKind::kUsernames: return "usernames";
  }
  return "";
}

std::string_view report_key(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::kNamedEntities: return "entities";
    case AttributeKind::kLinks: return "urls";
    case AttributeKind::kHashtags: return "hashtags";
    case AttributeKind::kUsernames: return "usernames";
  }
  return "";
}

std::string_view diagnostic_name(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::kNamedEntities: return "named_entity";
    case AttributeKind::kLinks: return "url";
    case AttributeKind::kHashtags: return "hashtag";
    case AttributeKind::kUsernames: return "username";
  }
  return "";
}

const std::vector<std::string>& AttributeSet::of(AttributeKind kind) const {
  switch (kind) {
    case AttributeKind::kNamedEntities: return named_entities;
    case AttributeKind::kLinks: return urls;
    case AttributeKind::kHashtags: return hashtags;
    case AttributeKind::kUsernames: return usernames;
  }
  return named_entities;
}

std::vector<std::string>& AttributeSet::of(AttributeKind kind) {
  return const_cast<std::vector<std::string>&>(std::as_const(*this).of(kind));
}

bool AttributeSet::empty() const { return kinds_present() == 0; }

int AttributeSet::kinds_present() const {
  int n = 0;
  for (AttributeKind k : kPromptAttributeOrder) n += of(k).empty() ? 0 : 1;
  return n;
}

bool is_hashtag_char(char32_t cp) { return is_letter(cp) || is_digit(cp) || cp == '_'; }

bool is_username_char(char32_t cp) { return is_hashtag_char(cp) || cp == '.'; }

namespace {

template <typename Pred>
bool prefixed_run(std::string_view s, char prefix, Pred pred) {
  if (s.size() < 2 || s[0] != prefix) return false;
  for (std::size_t i = 1; i < s.size();) {
    const DecodedCodepoint d = decode_utf8_at(s, i);
    if (!pred(d.value)) return false;
    i += d.length;
  }
  return true;
}

}  // namespace

bool is_valid_hashtag(std::string_view s) { return prefixed_run(s, '#', is_hashtag_char); }

bool is_valid_username(std::string_view s) { return prefixed_run(s, '@', is_username_char); }

bool is_valid_url(std::string_view s) {
  const std::string lower = ascii_lower(s);
  std::size_t prefix = 0;
  for (std::string_view p : {"http://", "https://", "www."}) {
    if (std::string_view(lower).starts_with(p)) {
      prefix = p.size();
      break;
    }
  }
  if (prefix == 0 || s.size() <= prefix) return false;
  for (char c : s) {
    if (is_ascii_space(c)) return false;
  }
  return true;
}

}  // namespace brandcap

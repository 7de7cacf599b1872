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

#include "brandcap/textproc/presence.h"

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "brandcap/core/strings.h"
#include "brandcap/textproc/extract.h"

namespace brandcap::textproc {
namespace {

std::unordered_set<std::string> lowered(const std::vector<std::string>& values) {
  std::unordered_set<std::string> out;
  for (const std::string& v : values) out.insert(ascii_lower(v));
  return out;
}

}  // namespace

PresenceReport attribute_presence(std::string_view caption, const AttributeSet& attrs) {
  const std::unordered_set<std::string> hashtags = lowered(extract_hashtags(caption));
  const std::unordered_set<std::string> usernames = lowered(extract_usernames(caption));
  const std::string caption_lower = ascii_lower(caption);

  PresenceReport report;
  for (AttributeKind kind : kPromptAttributeOrder) {
    KindPresence& kp = report.kinds[static_cast<std::size_t>(kind)];
    const std::vector<std::string>& values = attrs.of(kind);
    kp.provided_count = static_cast<int>(values.size());
    for (const std::string& v : values) {
      bool found = false;
      switch (kind) {
        case AttributeKind::kHashtags: found = hashtags.count(ascii_lower(v)) > 0; break;
        case AttributeKind::kUsernames: found = usernames.count(ascii_lower(v)) > 0; break;
        case AttributeKind::kLinks: found = caption.find(v) != std::string_view::npos; break;
        case AttributeKind::kNamedEntities:
          found = caption_lower.find(ascii_lower(v)) != std::string::npos;
          break;
      }
      kp.found_count += found ? 1 : 0;
    }
    kp.all_present = kp.found_count == kp.provided_count;
    report.all_present = report.all_present && kp.all_present;
  }
  return report;
}

std::string strip_attributes(std::string_view text, const AttributeSet& attrs) {
  // Mask grammar matches first, then remove entity occurrences from what is
  // left, longest entity first.
  std::vector<bool> removed(text.size(), false);
  const auto mark = [&](const std::vector<Span>& spans) {
    for (const Span& s : spans) {
      std::fill(removed.begin() + static_cast<std::ptrdiff_t>(s.begin),
                removed.begin() + static_cast<std::ptrdiff_t>(s.begin + s.length), true);
    }
  };
  mark(find_urls(text));
  mark(find_hashtags(text));
  mark(find_usernames(text));

  std::string kept;
  for (std::size_t i = 0; i < text.size(); ++i) {
    kept.push_back(removed[i] ? ' ' : text[i]);
  }

  std::vector<std::string> entities;
  for (const std::string& e : attrs.named_entities) {
    if (!trim(e).empty()) entities.emplace_back(trim(e));
  }
  std::stable_sort(entities.begin(), entities.end(),
                   [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  for (const std::string& e : entities) {
    const std::string needle = ascii_lower(e);
    std::string lower = ascii_lower(kept);
    std::size_t pos = lower.find(needle);
    while (pos != std::string::npos) {
      kept.replace(pos, needle.size(), std::string(needle.size(), ' '));
      lower.replace(pos, needle.size(), std::string(needle.size(), ' '));
      pos = lower.find(needle, pos + needle.size());
    }
  }
  return collapse_whitespace(kept);
}

}  // namespace brandcap::textproc

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

#include "brandcap/core/attributes.h"

namespace brandcap::textproc {

struct KindPresence {
  int provided_count = 0;
  int found_count = 0;
  bool all_present = true;  // vacuously true when nothing was provided
};

struct PresenceReport {
  std::array<KindPresence, 4> kinds{};  // indexed by AttributeKind
  bool all_present = true;

  const KindPresence& of(AttributeKind kind) const {
    return kinds[static_cast<std::size_t>(kind)];
  }
};

// Hashtags and usernames match as case-insensitive tokens of the caption
// (per the extraction grammars); URLs as case-sensitive substrings; named
// entities as case-insensitive substrings.
PresenceReport attribute_presence(std::string_view caption, const AttributeSet& attrs);

// Removes every hashtag, username and URL token found by the grammars and
// every case-insensitive occurrence of the provided named entities, then
// collapses whitespace.
std::string strip_attributes(std::string_view text, const AttributeSet& attrs);

}  // namespace brandcap::textproc

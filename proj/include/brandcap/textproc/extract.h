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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace brandcap::textproc {

// A match located in the source text (byte offsets).
struct Span {
  std::size_t begin = 0;
  std::size_t length = 0;
  std::string text;
};

// URL grammar: starts with http://, https:// or www. (scheme case-insensitive,
// not preceded by a letter or digit), runs to the next whitespace, and has
// trailing ".,;:!?)" characters stripped.
std::vector<Span> find_urls(std::string_view text);

// Hashtags: '#' followed by a maximal run of letters, digits and
// underscores. Text inside URLs is never scanned.
std::vector<Span> find_hashtags(std::string_view text);

// Usernames: '@' followed by a maximal run of letters, digits, underscores
// and periods, trailing periods excluded. The '@' must be at the start of the
// text or follow whitespace or an opening bracket or quote; "a@b" is not a
// mention.
std::vector<Span> find_usernames(std::string_view text);

// Match texts in order of appearance, deduplicated case-insensitively.
std::vector<std::string> extract_hashtags(std::string_view text);
std::vector<std::string> extract_usernames(std::string_view text);
std::vector<std::string> extract_urls(std::string_view text);

// Capitalized-phrase heuristic for named entities. A phrase is a maximal run
// of capitalized words that may contain "of"/"the" between capitalized
// words, and absorbs one directly preceding lowercase "the". A single
// sentence-initial capitalized word is not a phrase. Hashtag, username and
// URL tokens break phrases and are never part of one.
std::vector<std::string> extract_entities_heuristic(std::string_view text);

}  // namespace brandcap::textproc

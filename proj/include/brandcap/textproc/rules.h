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

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "brandcap/core/personality.h"

namespace brandcap::textproc {

// True when nothing but emoji, whitespace and punctuation remains. The empty
// string is emoji-only, so contentless captions fall under the same rule.
bool is_emoji_only(std::string_view text);

// Whitespace tokens of demojize(text) that contain a letter or digit and do
// not start with ':' (so emoji shortcodes contribute nothing).
int word_count(std::string_view text);

class LanguageDetector {
 public:
  virtual ~LanguageDetector() = default;
  virtual bool is_english(std::string_view text) const = 0;
};

// Cheap offline English test: at least 90% of letters are ASCII, and either
// a bundled stopword occurs or the text has fewer than three tokens. Text
// without any letters is not English.
class StopwordEnglishDetector final : public LanguageDetector {
 public:
  StopwordEnglishDetector();
  bool is_english(std::string_view text) const override;

  const std::unordered_set<std::string>& stopwords() const { return stopwords_; }

 private:
  std::unordered_set<std::string> stopwords_;
};

bool detect_english(std::string_view text);

// True iff some lowercase alphanumeric token of text starts with one of the
// personality's tonality stems.
bool contains_tonality_word(std::string_view text, Personality p);

}  // namespace brandcap::textproc

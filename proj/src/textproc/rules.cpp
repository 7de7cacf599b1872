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

#include "brandcap/textproc/rules.h"

#include "brandcap/core/resources.h"
#include "brandcap/core/strings.h"
#include "brandcap/textproc/emoji.h"

namespace brandcap::textproc {

bool is_emoji_only(std::string_view text) {
  const EmojiTable& table = EmojiTable::bundled();
  std::size_t i = 0;
  while (i < text.size()) {
    if (const std::size_t n = table.match_at(text, i); n > 0) {
      i += n;
      continue;
    }
    const DecodedCodepoint d = decode_utf8_at(text, i);
    if (!is_emoji_codepoint(d.value) && !is_unicode_space(d.value) &&
        !is_punctuation(d.value)) {
      return false;
    }
    i += d.length;
  }
  return true;
}

namespace {

bool has_letter_or_digit(std::string_view token) {
  for (std::size_t i = 0; i < token.size();) {
    const DecodedCodepoint d = decode_utf8_at(token, i);
    if (is_letter(d.value) || is_digit(d.value)) return true;
    i += d.length;
  }
  return false;
}

}  // namespace

int word_count(std::string_view text) {
  const std::string plain = demojize(text);
  int n = 0;
  for (std::string_view tok : split_whitespace(plain)) {
    if (tok.front() != ':' && has_letter_or_digit(tok)) ++n;
  }
  return n;
}

StopwordEnglishDetector::StopwordEnglishDetector() {
  for (std::string_view w : split_whitespace(resources::get("stopwords.txt"))) {
    stopwords_.insert(ascii_lower(w));
  }
}

bool StopwordEnglishDetector::is_english(std::string_view text) const {
  std::size_t ascii_letters = 0;
  std::size_t letters = 0;
  for (std::size_t i = 0; i < text.size();) {
    const DecodedCodepoint d = decode_utf8_at(text, i);
    if (is_letter(d.value)) {
      ++letters;
      if (d.value < 0x80) ++ascii_letters;
    }
    i += d.length;
  }
  if (letters == 0) return false;
  // ascii/letters >= 0.9 without floating point.
  if (ascii_letters * 10 < letters * 9) return false;

  const std::vector<std::string_view> tokens = split_whitespace(text);
  if (tokens.size() < 3) return true;
  for (std::string_view tok : tokens) {
    std::size_t b = 0;
    std::size_t e = tok.size();
    while (b < e && !is_ascii_alnum(tok[b])) ++b;
    while (e > b && !is_ascii_alnum(tok[e - 1])) --e;
    if (stopwords_.count(ascii_lower(tok.substr(b, e - b)))) return true;
  }
  return false;
}

bool detect_english(std::string_view text) {
  static const StopwordEnglishDetector kDetector;
  return kDetector.is_english(text);
}

bool contains_tonality_word(std::string_view text, Personality p) {
  const std::span<const std::string_view> stems = tonality_stems(p);
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && !is_ascii_alnum(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && is_ascii_alnum(text[i])) ++i;
    if (i == start) continue;
    const std::string token = ascii_lower(text.substr(start, i - start));
    for (std::string_view stem : stems) {
      if (std::string_view(token).starts_with(stem)) return true;
    }
  }
  return false;
}

}  // namespace brandcap::textproc

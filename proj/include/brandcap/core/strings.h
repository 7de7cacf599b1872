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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brandcap {

std::string_view trim(std::string_view s);
std::string ascii_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
bool is_ascii_space(char c);
bool is_ascii_alnum(char c);

// Whitespace-delimited tokens (ASCII whitespace).
std::vector<std::string_view> split_whitespace(std::string_view s);

std::string join(std::span<const std::string> parts, std::string_view sep);

// Collapses ASCII whitespace runs to one space and trims both ends.
std::string collapse_whitespace(std::string_view s);

// UTF-8 decoding. Invalid sequences decode to U+FFFD and consume one byte.
struct DecodedCodepoint {
  char32_t value;
  std::size_t length;
};
DecodedCodepoint decode_utf8_at(std::string_view s, std::size_t pos);
std::string encode_utf8(char32_t cp);

// Letter classification: ASCII letters plus the alphabetic blocks of the
// common scripts. Symbols, punctuation and emoji are never letters.
bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_unicode_space(char32_t cp);
bool is_punctuation(char32_t cp);
// Pictographs, dingbats, regional indicators and the emoji joiners and
// modifiers (ZWJ, variation selectors, skin tones, keycap, tags).
bool is_emoji_codepoint(char32_t cp);

}  // namespace brandcap

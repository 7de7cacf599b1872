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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace brandcap::textproc {

// Bidirectional emoji <-> ":shortcode:" table.
//
// File format: one mapping per line, "<hex codepoints space-separated><TAB>
// :shortcode:", UTF-8; blank lines and lines starting with '#' are ignored.
// parse() rejects tables that are not a bijection.
class EmojiTable {
 public:
  struct Entry {
    std::string emoji;      // UTF-8 bytes
    std::string shortcode;  // includes the surrounding colons
  };

  static const EmojiTable& bundled();
  static EmojiTable parse(std::string_view tsv);

  // Greedy longest match; unsupported codepoints pass through unchanged.
  std::string demojize(std::string_view text) const;
  // Replaces known ":shortcode:" tokens; unknown tokens are left verbatim.
  std::string emojize(std::string_view text) const;

  // Byte length of the longest emoji sequence starting at pos, or 0.
  std::size_t match_at(std::string_view text, std::size_t pos) const;

  std::optional<std::string_view> shortcode_for(std::string_view emoji) const;
  std::optional<std::string_view> emoji_for(std::string_view shortcode) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  struct Node {
    std::unordered_map<unsigned char, int> next;
    int entry = -1;
  };

  void insert(std::size_t entry_index);

  std::vector<Entry> entries_;
  std::vector<Node> trie_{1};
  std::unordered_map<std::string, std::size_t> by_shortcode_;
  std::size_t max_shortcode_len_ = 0;
};

// Convenience wrappers over the bundled table.
std::string demojize(std::string_view text);
std::string emojize(std::string_view text);

}  // namespace brandcap::textproc

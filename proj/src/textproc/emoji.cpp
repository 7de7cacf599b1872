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

#include "brandcap/textproc/emoji.h"

#include <charconv>

#include "brandcap/core/error.h"
#include "brandcap/core/resources.h"
#include "brandcap/core/strings.h"

namespace brandcap::textproc {

const EmojiTable& EmojiTable::bundled() {
  static const EmojiTable kTable = parse(resources::get("emoji_table.tsv"));
  return kTable;
}

EmojiTable EmojiTable::parse(std::string_view tsv) {
  EmojiTable table;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < tsv.size()) {
    std::size_t end = tsv.find('\n', pos);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view line = tsv.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || line.front() == '#') continue;

    const auto fail = [&](const std::string& why) {
      raise(ErrorKind::kSchemaError, "emoji table line " + std::to_string(line_no) + ": " + why);
    };
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) fail("missing TAB separator");
    Entry e;
    for (std::string_view hex : split_whitespace(line.substr(0, tab))) {
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), value, 16);
      if (ec != std::errc() || ptr != hex.data() + hex.size() || value > 0x10FFFF) {
        fail("bad codepoint '" + std::string(hex) + "'");
      }
      e.emoji += encode_utf8(static_cast<char32_t>(value));
    }
    e.shortcode = std::string(trim(line.substr(tab + 1)));
    if (e.emoji.empty()) fail("no codepoints");
    if (e.shortcode.size() < 3 || e.shortcode.front() != ':' || e.shortcode.back() != ':' ||
        e.shortcode.find(':', 1) != e.shortcode.size() - 1) {
      fail("shortcode must look like :name:");
    }
    if (table.shortcode_for(e.emoji)) fail("duplicate emoji for " + e.shortcode);
    if (table.by_shortcode_.count(e.shortcode)) fail("duplicate shortcode " + e.shortcode);
    table.by_shortcode_.emplace(e.shortcode, table.entries_.size());
    table.max_shortcode_len_ = std::max(table.max_shortcode_len_, e.shortcode.size());
    table.entries_.push_back(std::move(e));
    table.insert(table.entries_.size() - 1);
  }
  return table;
}

void EmojiTable::insert(std::size_t entry_index) {
  int node = 0;
  for (unsigned char c : entries_[entry_index].emoji) {
    auto it = trie_[node].next.find(c);
    if (it == trie_[node].next.end()) {
      trie_.emplace_back();
      const int child = static_cast<int>(trie_.size() - 1);
      trie_[node].next.emplace(c, child);
      node = child;
    } else {
      node = it->second;
    }
  }
  trie_[node].entry = static_cast<int>(entry_index);
}

std::size_t EmojiTable::match_at(std::string_view text, std::size_t pos) const {
  int node = 0;
  std::size_t best = 0;
  for (std::size_t i = pos; i < text.size(); ++i) {
    auto it = trie_[node].next.find(static_cast<unsigned char>(text[i]));
    if (it == trie_[node].next.end()) break;
    node = it->second;
    if (trie_[node].entry >= 0) best = i + 1 - pos;
  }
  return best;
}

std::optional<std::string_view> EmojiTable::shortcode_for(std::string_view emoji) const {
  if (emoji.empty() || match_at(emoji, 0) != emoji.size()) return std::nullopt;
  int node = 0;
  for (unsigned char c : emoji) node = trie_[node].next.at(c);
  return entries_[static_cast<std::size_t>(trie_[node].entry)].shortcode;
}

std::optional<std::string_view> EmojiTable::emoji_for(std::string_view shortcode) const {
  auto it = by_shortcode_.find(std::string(shortcode));
  if (it == by_shortcode_.end()) return std::nullopt;
  return entries_[it->second].emoji;
}

std::string EmojiTable::demojize(std::string_view text) const {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (const std::size_t n = match_at(text, i); n > 0) {
      out += *shortcode_for(text.substr(i, n));
      i += n;
    } else {
      // Copy one whole codepoint so a match never starts mid-sequence.
      const std::size_t len = decode_utf8_at(text, i).length;
      out.append(text.substr(i, len));
      i += len;
    }
  }
  return out;
}

std::string EmojiTable::emojize(std::string_view text) const {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ':') {
      const std::size_t close = text.find(':', i + 1);
      if (close != std::string_view::npos && close + 1 - i <= max_shortcode_len_) {
        if (auto e = emoji_for(text.substr(i, close + 1 - i))) {
          out += *e;
          i = close + 1;
          continue;
        }
      }
    }
    out.push_back(text[i]);
    ++i;
  }
  return out;
}

std::string demojize(std::string_view text) { return EmojiTable::bundled().demojize(text); }
std::string emojize(std::string_view text) { return EmojiTable::bundled().emojize(text); }

}  // namespace brandcap::textproc

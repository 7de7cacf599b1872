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

#include "brandcap/textproc/extract.h"

#include <unordered_set>

#include "brandcap/core/attributes.h"
#include "brandcap/core/strings.h"

namespace brandcap::textproc {
namespace {

constexpr std::string_view kUrlPrefixes[] = {"https://", "http://", "www."};
constexpr std::string_view kUrlTrailing = ".,;:!?)";

std::size_t url_prefix_at(std::string_view text, std::size_t i) {
  if (i > 0 && is_ascii_alnum(text[i - 1])) return 0;
  for (std::string_view p : kUrlPrefixes) {
    if (text.size() - i >= p.size() && iequals(text.substr(i, p.size()), p)) return p.size();
  }
  return 0;
}

bool in_spans(const std::vector<Span>& spans, std::size_t pos, std::size_t* skip_to) {
  for (const Span& s : spans) {
    if (pos >= s.begin && pos < s.begin + s.length) {
      *skip_to = s.begin + s.length;
      return true;
    }
  }
  return false;
}

template <typename Pred>
std::size_t consume_run(std::string_view text, std::size_t pos, Pred pred) {
  while (pos < text.size()) {
    const DecodedCodepoint d = decode_utf8_at(text, pos);
    if (!pred(d.value)) break;
    pos += d.length;
  }
  return pos;
}

bool mention_boundary(std::string_view text, std::size_t at) {
  if (at == 0) return true;
  const char prev = text[at - 1];
  return is_ascii_space(prev) || std::string_view("([{\"'").find(prev) != std::string_view::npos;
}

std::vector<std::string> dedup_texts(const std::vector<Span>& spans) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const Span& s : spans) {
    if (seen.insert(ascii_lower(s.text)).second) out.push_back(s.text);
  }
  return out;
}

}  // namespace

std::vector<Span> find_urls(std::string_view text) {
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t prefix = url_prefix_at(text, i);
    if (prefix == 0) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !is_ascii_space(text[end])) ++end;
    std::size_t stripped = end;
    while (stripped > i + prefix && kUrlTrailing.find(text[stripped - 1]) != std::string_view::npos) {
      --stripped;
    }
    if (stripped > i + prefix) {
      out.push_back(Span{i, stripped - i, std::string(text.substr(i, stripped - i))});
    }
    i = end;
  }
  return out;
}

std::vector<Span> find_hashtags(std::string_view text) {
  const std::vector<Span> urls = find_urls(text);
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t skip = 0;
    if (in_spans(urls, i, &skip)) {
      i = skip;
      continue;
    }
    if (text[i] == '#') {
      const std::size_t end = consume_run(text, i + 1, is_hashtag_char);
      if (end > i + 1) {
        out.push_back(Span{i, end - i, std::string(text.substr(i, end - i))});
        i = end;
        continue;
      }
    }
    ++i;
  }
  return out;
}

std::vector<Span> find_usernames(std::string_view text) {
  const std::vector<Span> urls = find_urls(text);
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t skip = 0;
    if (in_spans(urls, i, &skip)) {
      i = skip;
      continue;
    }
    if (text[i] == '@' && mention_boundary(text, i)) {
      const std::size_t end = consume_run(text, i + 1, is_username_char);
      std::size_t stripped = end;
      while (stripped > i + 1 && text[stripped - 1] == '.') --stripped;
      if (stripped > i + 1) {
        out.push_back(Span{i, stripped - i, std::string(text.substr(i, stripped - i))});
      }
      i = std::max(end, i + 1);
      continue;
    }
    ++i;
  }
  return out;
}

std::vector<std::string> extract_hashtags(std::string_view text) {
  return dedup_texts(find_hashtags(text));
}

std::vector<std::string> extract_usernames(std::string_view text) {
  return dedup_texts(find_usernames(text));
}

std::vector<std::string> extract_urls(std::string_view text) { return dedup_texts(find_urls(text)); }

namespace {

struct WordToken {
  std::size_t core_begin = 0;
  std::size_t core_end = 0;
  std::string_view core;
  bool leading_punct = false;
  bool trailing_punct = false;
  bool sentence_end = false;
  bool special = false;  // hashtag, mention or URL
  bool capitalized = false;
  bool connector = false;
};

bool is_edge_punct(char c) {
  return std::string_view("\"'()[]{}<>,.;:!?*~-").find(c) != std::string_view::npos;
}

std::vector<WordToken> word_tokens(std::string_view text) {
  std::vector<WordToken> out;
  for (std::string_view tok : split_whitespace(text)) {
    WordToken t;
    const std::size_t base = static_cast<std::size_t>(tok.data() - text.data());
    std::size_t b = 0;
    std::size_t e = tok.size();
    while (b < e && is_edge_punct(tok[b])) ++b;
    while (e > b && is_edge_punct(tok[e - 1])) --e;
    t.core_begin = base + b;
    t.core_end = base + e;
    t.core = tok.substr(b, e - b);
    t.leading_punct = b > 0;
    t.trailing_punct = e < tok.size();
    const std::string_view tail = tok.substr(e);
    t.sentence_end = tail.find_first_of(".!?") != std::string_view::npos;
    t.special = tok.find('#') != std::string_view::npos ||
                tok.find('@') != std::string_view::npos || !find_urls(tok).empty();
    t.capitalized = !t.core.empty() && t.core[0] >= 'A' && t.core[0] <= 'Z';
    t.connector = t.core == "of" || t.core == "the";
    out.push_back(t);
  }
  return out;
}

}  // namespace

std::vector<std::string> extract_entities_heuristic(std::string_view text) {
  const std::vector<WordToken> toks = word_tokens(text);
  const std::size_t n = toks.size();
  const auto starts_phrase = [&](std::size_t k) {
    return toks[k].capitalized && !toks[k].special;
  };

  std::vector<Span> found;
  std::size_t i = 0;
  while (i < n) {
    if (!starts_phrase(i)) {
      ++i;
      continue;
    }
    std::size_t end = i;
    int caps = 1;
    while (!toks[end].trailing_punct) {
      std::size_t k = end + 1;
      while (k < n && toks[k].connector && !toks[k].leading_punct && !toks[k].trailing_punct) ++k;
      if (k < n && starts_phrase(k) && !toks[k].leading_punct) {
        end = k;
        ++caps;
        continue;
      }
      break;
    }
    std::size_t first = i;
    if (i > 0 && toks[i - 1].core == "the" && !toks[i - 1].trailing_punct &&
        !toks[i - 1].special && !toks[i].leading_punct) {
      first = i - 1;
    }
    const bool sentence_initial = i == 0 || toks[i - 1].sentence_end;
    if (!(caps == 1 && first == i && sentence_initial)) {
      const std::size_t b = toks[first].core_begin;
      found.push_back(Span{b, toks[end].core_end - b,
                           std::string(text.substr(b, toks[end].core_end - b))});
    }
    i = end + 1;
  }
  return dedup_texts(found);
}

}  // namespace brandcap::textproc

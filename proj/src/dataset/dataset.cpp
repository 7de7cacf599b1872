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

#include "brandcap/dataset/dataset.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

#include "brandcap/core/error.h"
#include "brandcap/core/random.h"
#include "brandcap/core/strings.h"
#include "brandcap/textproc/emoji.h"
#include "brandcap/textproc/extract.h"

namespace brandcap::dataset {

std::string_view drop_reason_name(DropReason r) {
  switch (r) {
    case DropReason::kEmojiOnly: return "emoji-only";
    case DropReason::kTooShort: return "too-short";
    case DropReason::kNotEnglish: return "not-english";
  }
  return "unknown";
}

std::optional<DropReason> first_failing_rule(std::string_view caption, const textproc::LanguageDetector& lang) {
  if (textproc::is_emoji_only(caption)) return DropReason::kEmojiOnly;
  if (textproc::word_count(caption) < kMinWords) return DropReason::kTooShort;
  if (!lang.is_english(caption)) return DropReason::kNotEnglish;
  return std::nullopt;
}

CleanResult clean(std::span<const PostRecord> records, const textproc::LanguageDetector& lang) {
  CleanResult out;
  for (const PostRecord& r : records) {
    if (const auto reason = first_failing_rule(r.caption, lang)) {
      out.dropped.push_back({r, *reason});
    } else {
      out.kept.push_back(r);
    }
  }
  return out;
}

CleanResult clean(std::span<const PostRecord> records) {
  static const textproc::StopwordEnglishDetector kDetector;
  return clean(records, kDetector);
}

SplitSet assign_splits(std::span<const PostRecord> records, const BrandMap& brands, double val_fraction,
                       std::uint64_t seed) {
  if (!(val_fraction > 0.0 && val_fraction < 1.0)) {
    raise(ErrorKind::kPreconditionViolation, "validation fraction must be in (0, 1)");
  }
  // Resolve every brand before splitting so an unknown one fails the whole call.
  std::vector<const BrandEntry*> entries;
  entries.reserve(records.size());
  for (const PostRecord& r : records) entries.push_back(&brands.at(r.brand));

  std::vector<bool> is_validation(records.size(), false);
  for (Personality p : kAllPersonalities) {
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (!entries[i]->held_out_for_test && entries[i]->personality == p) pool.push_back(i);
    }
    SeededRng rng(splitmix64(seed ^ (0x9e37ULL * (index_of(p) + 1))));
    rng.shuffle(pool);
    const auto n_val = static_cast<std::size_t>(std::llround(static_cast<double>(pool.size()) * val_fraction));
    for (std::size_t k = 0; k < n_val && k < pool.size(); ++k) is_validation[pool[k]] = true;
  }

  SplitSet s;
  for (std::size_t i = 0; i < records.size(); ++i) {
    PostRecord r = records[i];
    // The brand map is authoritative for the label.
    r.personality = entries[i]->personality;
    if (entries[i]->held_out_for_test) {
      s.test.push_back(std::move(r));
    } else if (is_validation[i]) {
      s.validation.push_back(std::move(r));
    } else {
      s.train.push_back(std::move(r));
    }
  }
  return s;
}

std::array<std::int64_t, 3> StatsTable::totals() const {
  std::array<std::int64_t, 3> t{};
  for (const auto& row : counts) {
    for (std::size_t c = 0; c < 3; ++c) t[c] += row[c];
  }
  return t;
}

StatsTable stats(const SplitSet& s) {
  StatsTable t;
  const std::array<const std::vector<PostRecord>*, 3> splits = {&s.train, &s.validation, &s.test};
  for (std::size_t c = 0; c < 3; ++c) {
    for (const PostRecord& r : *splits[c]) ++t.counts[index_of(r.personality)][c];
  }
  return t;
}

std::string format_stats(const StatsTable& t) {
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"Personality", "Train", "Validation", "Test"});
  const auto row_of = [](std::string_view name, const std::array<std::int64_t, 3>& c) {
    return std::array<std::string, 4>{std::string(name), std::to_string(c[0]), std::to_string(c[1]),
                                      std::to_string(c[2])};
  };
  for (Personality p : kAllPersonalities) rows.push_back(row_of(display_name(p), t.counts[index_of(p)]));
  rows.push_back(row_of("Total", t.totals()));
  std::array<std::size_t, 4> width{};
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line = r[0] + std::string(width[0] - r[0].size(), ' ');
    for (std::size_t c = 1; c < 4; ++c) line += " | " + std::string(width[c] - r[c].size(), ' ') + r[c];
    out += line + "\n";
  }
  return out;
}

std::vector<PostRecord> sample_test(const SplitSet& s, int per_personality, std::uint64_t seed) {
  if (per_personality < 0) raise(ErrorKind::kPreconditionViolation, "per-personality sample size is negative");
  std::vector<PostRecord> out;
  for (Personality p : kAllPersonalities) {
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < s.test.size(); ++i) {
      if (s.test[i].personality == p) pool.push_back(i);
    }
    if (pool.size() < static_cast<std::size_t>(per_personality)) {
      raise(ErrorKind::kInsufficientTestRecords, std::string(display_name(p)) + " has " +
                                                     std::to_string(pool.size()) + " test records, " +
                                                     std::to_string(per_personality) + " requested");
    }
    SeededRng rng(splitmix64(seed ^ (0x51edULL * (index_of(p) + 1))));
    rng.shuffle(pool);
    pool.resize(static_cast<std::size_t>(per_personality));
    std::sort(pool.begin(), pool.end());
    for (std::size_t i : pool) out.push_back(s.test[i]);
  }
  return out;
}

TrainingPair build_training_pair(const PostRecord& r, PromptVariant variant,
                                 const textproc::EntityExtractor& entities,
                                 const std::optional<std::string>& description) {
  const std::optional<std::string>& desc = description ? description : r.description;
  if (!desc || trim(*desc).empty()) {
    raise(ErrorKind::kPreconditionViolation, "record '" + r.id + "' has no image description");
  }
  CaptionRequest req;
  req.id = r.id;
  req.description = *desc;
  req.personality = r.personality;
  req.variant = variant;
  req.attributes.hashtags = textproc::extract_hashtags(r.caption);
  req.attributes.usernames = textproc::extract_usernames(r.caption);
  req.attributes.urls = textproc::extract_urls(r.caption);
  req.attributes.named_entities = entities.extract(r.caption);
  const ValidatedRequest v = validate_request(req);

  TrainingPair p;
  p.id = r.id;
  p.instruction = prompting::render_instruction(v).text;
  p.target = textproc::demojize(r.caption);
  p.personality = r.personality;
  p.variant = variant;
  p.description = v->description;
  p.attributes = v->attributes;
  return p;
}

prompting::ShotExample to_shot(const TrainingPair& p) {
  prompting::ShotExample s;
  s.id = p.id;
  s.description = p.description;
  s.attributes = p.attributes;
  s.personality = p.personality;
  s.target_caption = p.target;
  return s;
}

}  // namespace brandcap::dataset

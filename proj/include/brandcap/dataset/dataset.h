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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brandcap/core/brand_map.h"
#include "brandcap/core/records.h"
#include "brandcap/core/request.h"
#include "brandcap/prompting/prompts.h"
#include "brandcap/textproc/entities.h"
#include "brandcap/textproc/rules.h"

namespace brandcap::dataset {

// Cleaning rules in evaluation order; a dropped record carries the first
// rule it fails.
enum class DropReason { kEmojiOnly, kTooShort, kNotEnglish };

inline constexpr int kMinWords = 10;

std::string_view drop_reason_name(DropReason r);  // "emoji-only", "too-short", "not-english"

std::optional<DropReason> first_failing_rule(std::string_view caption, const textproc::LanguageDetector& lang);

struct DroppedRecord {
  PostRecord record;
  DropReason reason;
};

struct CleanResult {
  std::vector<PostRecord> kept;
  std::vector<DroppedRecord> dropped;
};

// Order preserving. Idempotent: clean(clean(x).kept).kept == clean(x).kept.
CleanResult clean(std::span<const PostRecord> records);
CleanResult clean(std::span<const PostRecord> records, const textproc::LanguageDetector& lang);

inline constexpr double kDefaultValFraction = 0.11;

struct SplitSet {
  std::vector<PostRecord> train;
  std::vector<PostRecord> validation;
  std::vector<PostRecord> test;
};

// Held-out brands go to test. The rest is split per personality: a seeded
// shuffle picks llround(n * val_fraction) records for validation. Each split
// keeps input order.
//
// Errors: kUnknownBrand; kPreconditionViolation unless 0 < val_fraction < 1.
SplitSet assign_splits(std::span<const PostRecord> records, const BrandMap& brands,
                       double val_fraction = kDefaultValFraction, std::uint64_t seed = 0);

struct StatsTable {
  // [personality][train, validation, test]
  std::array<std::array<std::int64_t, 3>, kPersonalityCount> counts{};
  std::array<std::int64_t, 3> totals() const;
  friend bool operator==(const StatsTable&, const StatsTable&) = default;
};

StatsTable stats(const SplitSet& s);
// Aligned text table: one row per personality and a totals row.
std::string format_stats(const StatsTable& t);

// Seeded sample without replacement of per_personality test records for
// each personality, grouped by personality in index order and kept in test
// split order within a group.
//
// Errors: kInsufficientTestRecords; kPreconditionViolation for a negative count.
std::vector<PostRecord> sample_test(const SplitSet& s, int per_personality = 50, std::uint64_t seed = 0);

struct TrainingPair {
  std::string id;
  std::string instruction;
  // Ground-truth caption, demojized.
  std::string target;
  Personality personality = Personality::kSincerity;
  PromptVariant variant = PromptVariant::kSelective;
  // The prompt inputs, kept so the pair can also serve as an in-context shot.
  std::string description;
  AttributeSet attributes;
};

// Hashtags, usernames and URLs come from the caption grammars and entities
// from `entities`; the instruction is rendered for the record's personality.
// The description is `description` when given, else the record's stored one.
//
// Errors: kPreconditionViolation when no description is available; those
// of validate_request.
TrainingPair build_training_pair(const PostRecord& r, PromptVariant variant,
                                 const textproc::EntityExtractor& entities,
                                 const std::optional<std::string>& description = std::nullopt);

prompting::ShotExample to_shot(const TrainingPair& p);

}  // namespace brandcap::dataset

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
#include <string_view>
#include <utility>
#include <vector>

#include "brandcap/core/attributes.h"
#include "brandcap/core/personality.h"
#include "brandcap/providers/provider.h"
#include "brandcap/textproc/presence.h"

namespace brandcap::metrics {

using providers::Embedding;

inline constexpr double kClipScoreWeight = 2.5;

// dot(a, b) / (|a| |b|), clamped to [-1, 1].
// Errors: kDimensionMismatch (different or zero dims); kZeroVector.
double cosine_similarity(std::span<const double> a, std::span<const double> b);
double cosine_similarity(const Embedding& a, const Embedding& b);

// w * max(cos(img, txt), 0). Errors: as cosine_similarity, and
// kPreconditionViolation unless w > 0.
double clipscore(const Embedding& img, const Embedding& txt, double w = kClipScoreWeight);

// Rows: actual personality. Columns: predicted. Index order is index_of().
class ConfusionMatrix {
 public:
  using Cells = std::array<std::array<std::int64_t, kPersonalityCount>, kPersonalityCount>;

  void add(Personality actual, Personality predicted, std::int64_t count = 1);
  std::int64_t at(Personality actual, Personality predicted) const;
  std::int64_t at(std::size_t row, std::size_t col) const { return cells_[row][col]; }
  std::int64_t total() const;
  std::int64_t trace() const;
  const Cells& cells() const { return cells_; }
  // Row-major 25 values.
  std::vector<double> flattened() const;

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

 private:
  Cells cells_{};
};

ConfusionMatrix confusion(std::span<const std::pair<Personality, Personality>> pairs);

// Items whose judge produced no parseable vote, counted per actual class.
// They are wrong for accuracy and false negatives for their class's F1.
using UnjudgedCounts = std::array<std::int64_t, kPersonalityCount>;

// Percentage of correct predictions. Errors: kEmptyMatrix.
double accuracy(const ConfusionMatrix& m, const UnjudgedCounts& unjudged = {});

// Unweighted mean over the five classes of 2PR/(P+R); a class with
// P + R = 0 contributes 0. Errors: kEmptyMatrix.
double macro_f1(const ConfusionMatrix& m, const UnjudgedCounts& unjudged = {});

// Mean squared difference of corresponding cells (raw counts).
double heatmap_mse(const ConfusionMatrix& a, const ConfusionMatrix& b);
// Flattened heatmaps. Errors: kShapeMismatch for different lengths or empty input.
double heatmap_mse(std::span<const double> a, std::span<const double> b);

// First of the five personality nouns, case-insensitive, by position in text.
std::optional<Personality> parse_personality_vote(std::string_view completion);

struct JudgeResult {
  Personality personality = Personality::kSincerity;
  std::array<int, kPersonalityCount> votes{};
  int parsed = 0;
  int requested = 0;
};

// Majority vote over n sampled judge completions. Ties go to the
// personality whose first vote came earliest.
// Errors: kPreconditionViolation (blank caption, n < 1); kAllUnparseable;
// provider errors propagate.
JudgeResult judge_personality(providers::ChatProvider& chat, std::string_view caption, int n = 10,
                              const providers::ChatParams& params = {});

// Majority vote over already-sampled completions (the reduction used by
// judge_personality). Errors: kAllUnparseable.
JudgeResult tally_votes(std::span<const std::string> completions);

struct CoverageRow {
  AttributeSet attributes;
  textproc::PresenceReport presence;
};

struct KindCoverage {
  int provided = 0;   // rows that provide at least one item of the kind
  int satisfied = 0;  // of those, rows with every item present
  // 100 * satisfied / provided; empty when no row provides the kind.
  std::optional<double> percent;
};

struct CoverageReport {
  std::array<KindCoverage, 4> kinds{};  // indexed by AttributeKind
  const KindCoverage& of(AttributeKind kind) const { return kinds[static_cast<std::size_t>(kind)]; }
};

CoverageReport coverage(std::span<const CoverageRow> rows);

}  // namespace brandcap::metrics

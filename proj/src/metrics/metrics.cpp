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

#include "brandcap/metrics/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "brandcap/core/error.h"
#include "brandcap/core/strings.h"
#include "brandcap/prompting/prompts.h"

namespace brandcap::metrics {

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) {
    raise(ErrorKind::kDimensionMismatch,
          "embedding dims differ or are empty: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) raise(ErrorKind::kZeroVector, "cosine similarity of an all-zero vector");
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

double cosine_similarity(const Embedding& a, const Embedding& b) {
  return cosine_similarity(std::span<const double>(a.vector), std::span<const double>(b.vector));
}

double clipscore(const Embedding& img, const Embedding& txt, double w) {
  if (!(w > 0.0)) raise(ErrorKind::kPreconditionViolation, "CLIPScore weight must be positive");
  return w * std::max(cosine_similarity(img, txt), 0.0);
}

void ConfusionMatrix::add(Personality actual, Personality predicted, std::int64_t count) {
  cells_[index_of(actual)][index_of(predicted)] += count;
}

std::int64_t ConfusionMatrix::at(Personality actual, Personality predicted) const {
  return cells_[index_of(actual)][index_of(predicted)];
}

std::int64_t ConfusionMatrix::total() const {
  std::int64_t t = 0;
  for (const auto& row : cells_) {
    for (std::int64_t c : row) t += c;
  }
  return t;
}

std::int64_t ConfusionMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < kPersonalityCount; ++i) t += cells_[i][i];
  return t;
}

std::vector<double> ConfusionMatrix::flattened() const {
  std::vector<double> out;
  out.reserve(kPersonalityCount * kPersonalityCount);
  for (const auto& row : cells_) {
    for (std::int64_t c : row) out.push_back(static_cast<double>(c));
  }
  return out;
}

ConfusionMatrix confusion(std::span<const std::pair<Personality, Personality>> pairs) {
  ConfusionMatrix m;
  for (const auto& [actual, predicted] : pairs) m.add(actual, predicted);
  return m;
}

namespace {

std::int64_t unjudged_total(const UnjudgedCounts& u) {
  std::int64_t t = 0;
  for (std::int64_t c : u) t += c;
  return t;
}

}  // namespace

double accuracy(const ConfusionMatrix& m, const UnjudgedCounts& unjudged) {
  const std::int64_t total = m.total() + unjudged_total(unjudged);
  if (total == 0) raise(ErrorKind::kEmptyMatrix, "accuracy of an empty confusion matrix");
  return 100.0 * static_cast<double>(m.trace()) / static_cast<double>(total);
}

double macro_f1(const ConfusionMatrix& m, const UnjudgedCounts& unjudged) {
  if (m.total() + unjudged_total(unjudged) == 0) {
    raise(ErrorKind::kEmptyMatrix, "macro-F1 of an empty confusion matrix");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < kPersonalityCount; ++k) {
    const double tp = static_cast<double>(m.at(k, k));
    double predicted = 0.0;
    double actual = static_cast<double>(unjudged[k]);
    for (std::size_t j = 0; j < kPersonalityCount; ++j) {
      predicted += static_cast<double>(m.at(j, k));
      actual += static_cast<double>(m.at(k, j));
    }
    const double p = predicted > 0.0 ? tp / predicted : 0.0;
    const double r = actual > 0.0 ? tp / actual : 0.0;
    sum += (p + r) > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
  }
  return sum / static_cast<double>(kPersonalityCount);
}

double heatmap_mse(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) {
    raise(ErrorKind::kShapeMismatch,
          "heatmaps have " + std::to_string(a.size()) + " and " + std::to_string(b.size()) + " cells");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum / static_cast<double>(a.size());
}

double heatmap_mse(const ConfusionMatrix& a, const ConfusionMatrix& b) {
  const std::vector<double> fa = a.flattened();
  const std::vector<double> fb = b.flattened();
  return heatmap_mse(std::span<const double>(fa), std::span<const double>(fb));
}

std::optional<Personality> parse_personality_vote(std::string_view completion) {
  const std::string lower = ascii_lower(completion);
  std::optional<Personality> best;
  std::size_t best_pos = std::string::npos;
  for (Personality p : kAllPersonalities) {
    const std::size_t pos = lower.find(ascii_lower(display_name(p)));
    if (pos < best_pos) {
      best_pos = pos;
      best = p;
    }
  }
  return best;
}

JudgeResult tally_votes(std::span<const std::string> completions) {
  JudgeResult result;
  result.requested = static_cast<int>(completions.size());
  std::array<int, kPersonalityCount> first_vote;
  first_vote.fill(-1);
  for (std::size_t i = 0; i < completions.size(); ++i) {
    const std::optional<Personality> vote = parse_personality_vote(completions[i]);
    if (!vote) continue;
    const std::size_t k = index_of(*vote);
    ++result.votes[k];
    ++result.parsed;
    if (first_vote[k] < 0) first_vote[k] = static_cast<int>(i);
  }
  if (result.parsed == 0) {
    raise(ErrorKind::kAllUnparseable,
          "none of " + std::to_string(completions.size()) + " judge completions named a personality");
  }
  std::size_t winner = kPersonalityCount;
  for (std::size_t k = 0; k < kPersonalityCount; ++k) {
    if (result.votes[k] == 0) continue;
    if (winner == kPersonalityCount || result.votes[k] > result.votes[winner] ||
        (result.votes[k] == result.votes[winner] && first_vote[k] < first_vote[winner])) {
      winner = k;
    }
  }
  result.personality = kAllPersonalities[winner];
  return result;
}

JudgeResult judge_personality(providers::ChatProvider& chat, std::string_view caption, int n,
                              const providers::ChatParams& params) {
  if (n < 1) raise(ErrorKind::kPreconditionViolation, "judge needs n >= 1 samples");
  const prompting::RenderedPrompt prompt = prompting::render_geval_prompt(caption);
  providers::ChatRequest request;
  request.messages = prompt.messages;
  request.params = params;
  request.params.n = n;
  const providers::ChatResponse response = chat.chat(request);
  JudgeResult result = tally_votes(response.completions);
  result.requested = n;
  return result;
}

CoverageReport coverage(std::span<const CoverageRow> rows) {
  CoverageReport report;
  for (const CoverageRow& row : rows) {
    for (AttributeKind kind : kPromptAttributeOrder) {
      if (row.attributes.of(kind).empty()) continue;
      KindCoverage& k = report.kinds[static_cast<std::size_t>(kind)];
      ++k.provided;
      if (row.presence.of(kind).all_present) ++k.satisfied;
    }
  }
  for (KindCoverage& k : report.kinds) {
    if (k.provided > 0) k.percent = 100.0 * k.satisfied / k.provided;
  }
  return report;
}

}  // namespace brandcap::metrics

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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "brandcap/core/records.h"
#include "brandcap/core/request.h"
#include "brandcap/metrics/metrics.h"
#include "brandcap/providers/provider.h"

namespace brandcap::metrics {

struct EvalItem {
  // Source post; supplies the brand-derived actual personality and, when the
  // generated caption has none, the image.
  std::optional<PostRecord> record;
  CaptionRequest request;
  GeneratedCaption generated;
  std::optional<std::string> ground_truth;
};

struct EvalOptions {
  // Row label of the report.
  std::string model = "brandcap";
  bool skip_clipscore = false;
  bool skip_geval = false;
  int judge_n = 10;
  double clip_weight = kClipScoreWeight;
  int threads = 1;
  // Judge sampling parameters; an empty model id uses the provider set's.
  providers::ChatParams judge_params;
};

struct MetricValue {
  enum class State { kValue, kNotApplicable, kSkipped };
  State state = State::kNotApplicable;
  double value = 0.0;

  static MetricValue of(double v) { return {State::kValue, v}; }
  static MetricValue not_applicable() { return {State::kNotApplicable, 0.0}; }
  static MetricValue skipped() { return {State::kSkipped, 0.0}; }
  bool has_value() const { return state == State::kValue; }
  friend bool operator==(const MetricValue&, const MetricValue&) = default;
};

struct EvalReport {
  std::string model;
  int n_items = 0;
  MetricValue clipscore;
  MetricValue clipscore_wo_add_info;
  MetricValue geval_accuracy;   // percentage
  MetricValue geval_macro_f1;   // in [0, 1]
  MetricValue cosine_similarity;
  std::array<MetricValue, 4> coverage{};  // indexed by AttributeKind; percentages
  std::optional<ConfusionMatrix> confusion;
  // Per-item failures, "<item id>: <message>", in item order.
  std::vector<std::string> warnings;

  const MetricValue& coverage_of(AttributeKind kind) const {
    return coverage[static_cast<std::size_t>(kind)];
  }
};

// Scores a batch of generated captions. Items are processed on up to
// opts.threads workers and reduced in input order, so the report does not
// depend on the thread count. A failing metric for one item is recorded as a
// warning and that item is left out of that metric's mean; a caption the
// judge cannot classify counts as incorrect.
EvalReport evaluate_run(const providers::ProviderSet& providers, std::span<const EvalItem> items,
                        const EvalOptions& opts = {});

// One JSON object; reals rounded to 6 decimals, unavailable metrics as the
// strings "not-applicable" or "skipped".
nlohmann::ordered_json report_to_json(const EvalReport& report);

// Aligned plain-text table with one header row and one row per report.
std::string report_to_text(std::span<const EvalReport> reports);
std::string report_to_text(const EvalReport& report);

}  // namespace brandcap::metrics

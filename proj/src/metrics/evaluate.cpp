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

#include "brandcap/metrics/evaluate.h"

#include <cmath>
#include <cstdio>
#include <exception>

#include "brandcap/core/error.h"
#include "brandcap/core/parallel.h"
#include "brandcap/core/strings.h"
#include "brandcap/textproc/presence.h"

namespace brandcap::metrics {
namespace {

struct ItemResult {
  std::optional<double> clip;
  std::optional<double> clip_wo;
  std::optional<Personality> predicted;
  bool unjudged = false;
  std::optional<double> cosine;
  AttributeSet attributes;
  textproc::PresenceReport presence;
  std::vector<std::string> warnings;
};

std::string item_label(const EvalItem& item, std::size_t index) {
  if (!item.request.id.empty()) return item.request.id;
  if (item.record && !item.record->id.empty()) return item.record->id;
  return "#" + std::to_string(index);
}

std::optional<std::string> item_image(const EvalItem& item) {
  if (item.generated.image_ref) return item.generated.image_ref;
  if (item.record && item.record->image_ref) return item.record->image_ref;
  return std::nullopt;
}

template <typename Fn>
void guarded(ItemResult& r, const std::string& what, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    r.warnings.push_back(what + ": " + e.what());
  }
}

ItemResult score_item(const providers::ProviderSet& ps, const EvalItem& item, const EvalOptions& opts) {
  ItemResult r;
  const std::string& caption = item.generated.text;
  r.attributes = item.request.attributes;
  r.presence = textproc::attribute_presence(caption, r.attributes);

  const std::optional<std::string> image = item_image(item);
  if (!opts.skip_clipscore && image) {
    guarded(r, "clipscore", [&] {
      const Embedding img = ps.embeddings->embed_image(*image, ps.embed_image_model);
      // CLIP text tower: the text side uses the image model's embedding space.
      r.clip = clipscore(img, ps.embeddings->embed_text(caption, ps.embed_image_model), opts.clip_weight);
      const std::string stripped = textproc::strip_attributes(caption, r.attributes);
      if (stripped.empty()) {
        r.warnings.push_back("clipscore_wo_add_info: caption is empty once attributes are removed");
        return;
      }
      r.clip_wo = clipscore(img, ps.embeddings->embed_text(stripped, ps.embed_image_model), opts.clip_weight);
    });
  }

  if (!opts.skip_geval) {
    providers::ChatParams params = opts.judge_params;
    if (params.model_id.empty()) params.model_id = ps.chat_model;
    try {
      r.predicted = judge_personality(*ps.chat, caption, opts.judge_n, params).personality;
    } catch (const Error& e) {
      r.unjudged = true;
      r.warnings.push_back(std::string("geval: ") + e.what());
    }
  }

  if (item.ground_truth && !trim(*item.ground_truth).empty()) {
    guarded(r, "cosine_similarity", [&] {
      r.cosine = cosine_similarity(ps.embeddings->embed_text(caption, ps.embed_text_model),
                                   ps.embeddings->embed_text(*item.ground_truth, ps.embed_text_model));
    });
  }
  return r;
}

MetricValue mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return MetricValue::not_applicable();
  double sum = 0.0;
  for (double x : xs) sum += x;
  return MetricValue::of(sum / static_cast<double>(xs.size()));
}

double round6(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;  // no "-0"
}

nlohmann::ordered_json metric_json(const MetricValue& m) {
  switch (m.state) {
    case MetricValue::State::kValue: return round6(m.value);
    case MetricValue::State::kNotApplicable: return "not-applicable";
    case MetricValue::State::kSkipped: return "skipped";
  }
  return nullptr;
}

std::string metric_cell(const MetricValue& m) {
  if (!m.has_value()) return "-";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", m.value);
  return buf;
}

}  // namespace

EvalReport evaluate_run(const providers::ProviderSet& providers, std::span<const EvalItem> items,
                        const EvalOptions& opts) {
  std::vector<ItemResult> results(items.size());
  parallel_for(items.size(), opts.threads,
               [&](std::size_t i) { results[i] = score_item(providers, items[i], opts); });

  EvalReport report;
  report.model = opts.model;
  report.n_items = static_cast<int>(items.size());

  std::vector<double> clip;
  std::vector<double> clip_wo;
  std::vector<double> cosine;
  ConfusionMatrix m;
  UnjudgedCounts unjudged{};
  std::vector<CoverageRow> rows;
  rows.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const ItemResult& r = results[i];
    const Personality actual = items[i].record ? items[i].record->personality : items[i].request.personality;
    if (r.clip) clip.push_back(*r.clip);
    if (r.clip_wo) clip_wo.push_back(*r.clip_wo);
    if (r.cosine) cosine.push_back(*r.cosine);
    if (r.predicted) m.add(actual, *r.predicted);
    if (r.unjudged) ++unjudged[index_of(actual)];
    rows.push_back({r.attributes, r.presence});
    const std::string label = item_label(items[i], i);
    for (const std::string& w : r.warnings) report.warnings.push_back(label + ": " + w);
  }

  if (opts.skip_clipscore) {
    report.clipscore = MetricValue::skipped();
    report.clipscore_wo_add_info = MetricValue::skipped();
  } else {
    report.clipscore = mean_of(clip);
    report.clipscore_wo_add_info = mean_of(clip_wo);
  }

  if (opts.skip_geval) {
    report.geval_accuracy = MetricValue::skipped();
    report.geval_macro_f1 = MetricValue::skipped();
  } else if (items.empty()) {
    report.geval_accuracy = MetricValue::not_applicable();
    report.geval_macro_f1 = MetricValue::not_applicable();
  } else {
    report.geval_accuracy = MetricValue::of(accuracy(m, unjudged));
    report.geval_macro_f1 = MetricValue::of(macro_f1(m, unjudged));
    report.confusion = m;
  }

  report.cosine_similarity = mean_of(cosine);

  const CoverageReport cov = coverage(rows);
  for (AttributeKind kind : kPromptAttributeOrder) {
    const KindCoverage& k = cov.of(kind);
    report.coverage[static_cast<std::size_t>(kind)] =
        k.percent ? MetricValue::of(*k.percent) : MetricValue::not_applicable();
  }
  return report;
}

nlohmann::ordered_json report_to_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["model"] = report.model;
  j["n_items"] = report.n_items;
  j["clipscore"] = metric_json(report.clipscore);
  j["clipscore_wo_add_info"] = metric_json(report.clipscore_wo_add_info);
  j["geval_accuracy"] = metric_json(report.geval_accuracy);
  j["geval_macro_f1"] = metric_json(report.geval_macro_f1);
  j["cosine_similarity"] = metric_json(report.cosine_similarity);
  nlohmann::ordered_json cov = nlohmann::ordered_json::object();
  for (AttributeKind kind : kReportAttributeOrder) {
    cov[std::string(report_key(kind))] = metric_json(report.coverage_of(kind));
  }
  j["coverage"] = cov;
  if (report.confusion) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.confusion->cells()) rows.push_back(row);
    j["confusion"] = rows;
  } else {
    j["confusion"] = nullptr;
  }
  j["warnings"] = report.warnings;
  return j;
}

std::string report_to_text(std::span<const EvalReport> reports) {
  std::vector<std::vector<std::string>> table;
  table.push_back({"Model", "CLIPScore", "CLIPScore w/o Add. Info", "G-Eval Acc", "G-Eval F1", "C.S.", "Hashtags",
                   "Entities", "Usernames", "URLs"});
  for (const EvalReport& r : reports) {
    std::vector<std::string> row = {r.model,
                                    metric_cell(r.clipscore),
                                    metric_cell(r.clipscore_wo_add_info),
                                    metric_cell(r.geval_accuracy),
                                    metric_cell(r.geval_macro_f1),
                                    metric_cell(r.cosine_similarity)};
    for (AttributeKind kind : kReportAttributeOrder) row.push_back(metric_cell(r.coverage_of(kind)));
    table.push_back(std::move(row));
  }
  std::vector<std::size_t> width(table.front().size(), 0);
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : table) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += " | ";
      // Model column left-aligned, numbers right-aligned.
      const std::string pad(width[c] - row[c].size(), ' ');
      line += c == 0 ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string report_to_text(const EvalReport& report) {
  return report_to_text(std::span<const EvalReport>(&report, 1));
}

}  // namespace brandcap::metrics

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

// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Runs from the fixture directory so relative image refs resolve.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brandcap/core/brand_map.h"
#include "brandcap/core/error.h"
#include "brandcap/core/random.h"
#include "brandcap/dataset/dataset.h"
#include "brandcap/dataset/io.h"
#include "brandcap/interfaces/config.h"
#include "brandcap/interfaces/service.h"
#include "brandcap/metrics/evaluate.h"
#include "brandcap/metrics/metrics.h"
#include "brandcap/pipeline/pipeline.h"
#include "brandcap/prompting/prompts.h"
#include "brandcap/providers/factory.h"
#include "brandcap/providers/mock.h"
#include "brandcap/textproc/emoji.h"
#include "brandcap/textproc/entities.h"
#include "brandcap/textproc/presence.h"
#include "brandcap/textproc/rules.h"
#include "dataset_audit.h"
#include "metric_oracles.h"
#include "prompt_cases.h"
#include "random_cases.h"

namespace brandcap::acceptance {
namespace {

using metrics::ConfusionMatrix;
using metrics::Embedding;
using testing::LabelPair;

// Collects failed checks; a criterion passes iff nothing was recorded.
class Check {
 public:
  void expect(bool ok, std::string what) {
    if (!ok && failures_.size() < 5) failures_.push_back(std::move(what));
    failed_ = failed_ || !ok;
  }
  bool failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

  void skip(std::string why) { skipped_ = std::move(why); }
  const std::optional<std::string>& skipped() const { return skipped_; }

 private:
  bool failed_ = false;
  std::vector<std::string> failures_;
  std::optional<std::string> skipped_;
};

template <typename Fn>
std::optional<ErrorKind> kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Embedding emb(std::vector<double> v) { return Embedding{std::move(v), "m"}; }

ConfusionMatrix matrix_of(const std::vector<LabelPair>& pairs) { return metrics::confusion(pairs); }

// ---- 1 ----

void golden_prompts(Check& c) {
  using prompting::render_chat_prompt;
  using prompting::render_instruction;
  const auto golden = [](const char* name) { return dataset::read_text_file(std::string("golden/") + name); };
  const std::vector<prompting::ShotExample> shots = {testing::sneaker_shot()};

  c.expect(render_instruction(validate_request(testing::mask_request(PromptVariant::kSelective))).text ==
               golden("instruction_mask_selective.txt"),
           "instruction selective");
  c.expect(render_instruction(validate_request(testing::mask_request(PromptVariant::kNonSelective))).text ==
               golden("instruction_mask_non_selective.txt"),
           "instruction non-selective");
  c.expect(render_chat_prompt(validate_request(testing::dog_request(PromptVariant::kSelective, 1)), shots).text ==
               golden("chat_one_shot_dog_selective.txt"),
           "chat selective");
  c.expect(
      render_chat_prompt(validate_request(testing::dog_request(PromptVariant::kNonSelective, 1)), shots).text ==
          golden("chat_one_shot_dog_non_selective.txt"),
      "chat non-selective");
  const prompting::RenderedPrompt judge = prompting::render_geval_prompt(testing::kGevalCaption);
  c.expect(judge.text == golden("judge_cozy_nights.txt"), "judge prompt");
  c.expect(judge.text.find(prompting::kCaptionMarker) == std::string::npos, "judge marker substituted");
}

// ---- 2 ----

void metric_oracles(Check& c) {
  constexpr double kTol = 1e-9;
  SeededRng rng(20260101);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t dim = 1 + rng.uniform(8);
    const auto a = testing::random_vector(rng, dim);
    const auto b = testing::random_vector(rng, dim);
    const double cs = metrics::cosine_similarity(emb(a), emb(b));
    c.expect(rel_err(cs, testing::oracle_cosine(a, b)) <= kTol, "cosine case " + std::to_string(i));
    const double w = 0.5 + 4 * rng.uniform_real();
    const double clip = metrics::clipscore(emb(a), emb(b), w);
    c.expect(rel_err(clip, testing::oracle_clipscore(a, b, w)) <= kTol, "clipscore case " + std::to_string(i));
  }
  for (int i = 0; i < 1000; ++i) {
    const std::vector<LabelPair> pairs = testing::random_pairs(rng, 40);
    std::vector<Personality> unjudged_list;
    metrics::UnjudgedCounts unjudged{};
    for (std::size_t k = 0, n = rng.uniform(3); k < n; ++k) {
      unjudged_list.push_back(testing::random_personality(rng));
      ++unjudged[index_of(unjudged_list.back())];
    }
    const ConfusionMatrix m = matrix_of(pairs);
    c.expect(rel_err(metrics::accuracy(m, unjudged), testing::oracle_accuracy(pairs, unjudged_list)) <= kTol,
             "accuracy case " + std::to_string(i));
    c.expect(rel_err(metrics::macro_f1(m, unjudged), testing::oracle_macro_f1(pairs, unjudged_list)) <= kTol,
             "macro_f1 case " + std::to_string(i));
  }
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng.uniform(25);
    std::vector<double> a(n);
    std::vector<double> b(n);
    for (std::size_t k = 0; k < n; ++k) {
      a[k] = static_cast<double>(rng.uniform(30));
      b[k] = static_cast<double>(rng.uniform(30));
    }
    c.expect(rel_err(metrics::heatmap_mse(a, b), testing::oracle_mse(a, b)) <= kTol,
             "heatmap_mse case " + std::to_string(i));
  }

  // Clamp: identical and opposite directions hit the bounds exactly, and a
  // negative cosine scores zero.
  c.expect(metrics::cosine_similarity(emb({3, 4}), emb({6, 8})) == 1.0, "cosine upper clamp");
  c.expect(metrics::cosine_similarity(emb({3, 4}), emb({-3, -4})) == -1.0, "cosine lower clamp");
  c.expect(metrics::clipscore(emb({1, 0}), emb({-1, 1})) == 0.0, "clipscore clamps negative cosine");
  c.expect(metrics::clipscore(emb({1, 0}), emb({2, 0})) == metrics::kClipScoreWeight, "clipscore at weight");
  // Ties: a uniform matrix has one correct cell per row.
  ConfusionMatrix uniform;
  for (Personality a : kAllPersonalities) {
    for (Personality p : kAllPersonalities) uniform.add(a, p, 3);
  }
  c.expect(metrics::accuracy(uniform) == 20.0, "uniform accuracy");
  c.expect(std::abs(metrics::macro_f1(uniform) - 0.2) < 1e-15, "uniform macro_f1");
  // Hand case: Sincerity F1 0.8, Excitement F1 2/3, others 0.
  ConfusionMatrix hand;
  hand.add(Personality::kSincerity, Personality::kSincerity, 2);
  hand.add(Personality::kSincerity, Personality::kExcitement, 1);
  hand.add(Personality::kExcitement, Personality::kExcitement, 1);
  c.expect(std::abs(metrics::macro_f1(hand) - 0.2933) < 5e-5, "hand macro_f1 0.2933");
  c.expect(metrics::accuracy(hand) == 75.0, "hand accuracy");
  // Empty inputs.
  c.expect(kind_of([] { metrics::accuracy(ConfusionMatrix{}); }) == ErrorKind::kEmptyMatrix, "empty accuracy");
  c.expect(kind_of([] { metrics::macro_f1(ConfusionMatrix{}); }) == ErrorKind::kEmptyMatrix, "empty macro_f1");
  c.expect(kind_of([] { metrics::cosine_similarity(emb({}), emb({})); }) == ErrorKind::kDimensionMismatch,
           "empty cosine");
  c.expect(kind_of([] { metrics::cosine_similarity(emb({0, 0}), emb({1, 0})); }) == ErrorKind::kZeroVector,
           "zero vector");
  c.expect(kind_of([] { metrics::heatmap_mse(std::vector<double>{}, std::vector<double>{}); }) ==
               ErrorKind::kShapeMismatch,
           "empty heatmap");
}

// ---- 3 ----

metrics::CoverageRow to_row(const testing::OracleRow& o) {
  return {o.attributes, textproc::attribute_presence(o.caption, o.attributes)};
}

void coverage_semantics(Check& c) {
  SeededRng rng(5150);
  std::vector<testing::OracleRow> orows;
  std::vector<metrics::CoverageRow> rows;
  for (int i = 0; i < 50; ++i) {
    orows.push_back(testing::random_coverage_row(rng));
    rows.push_back(to_row(orows.back()));
  }
  const metrics::CoverageReport got = metrics::coverage(rows);
  const auto want = testing::oracle_coverage(orows);
  for (AttributeKind kind : kPromptAttributeOrder) {
    c.expect(got.of(kind).percent == want.at(kind), "recount for " + std::string(report_key(kind)));
  }

  std::vector<metrics::CoverageRow> full;
  for (int i = 0; i < 50; ++i) full.push_back(to_row(testing::random_coverage_row(rng, true)));
  const metrics::CoverageReport all = metrics::coverage(full);
  for (AttributeKind kind : kPromptAttributeOrder) {
    if (all.of(kind).provided > 0) {
      c.expect(all.of(kind).percent == 100.0, "full rows for " + std::string(report_key(kind)));
    }
  }

  // No row provides URLs: not applicable, not zero.
  std::vector<metrics::CoverageRow> no_urls;
  for (const testing::OracleRow& o : orows) {
    testing::OracleRow r = o;
    r.attributes.urls.clear();
    no_urls.push_back(to_row(r));
  }
  const metrics::CoverageReport na = metrics::coverage(no_urls);
  c.expect(!na.of(AttributeKind::kLinks).percent.has_value(), "never-provided kind is not applicable");
  c.expect(na.of(AttributeKind::kLinks).provided == 0, "never-provided kind counts no rows");
}

// ---- 4 ----

std::vector<std::string> repeat(const std::string& s, int n) { return std::vector<std::string>(n, s); }

void judge_votes(Check& c) {
  {
    providers::ScriptedChatProvider chat;
    std::vector<std::string> script = repeat("Sincerity", 6);
    for (const std::string& s : repeat("Brand personality: Excitement", 4)) script.push_back(s);
    chat.push(script);
    const metrics::JudgeResult r = metrics::judge_personality(chat, "a caption", 10);
    c.expect(r.personality == Personality::kSincerity, "6-4 winner");
    c.expect(r.votes[index_of(Personality::kSincerity)] == 6 && r.votes[index_of(Personality::kExcitement)] == 4,
             "6-4 tally");
    c.expect(r.parsed == 10 && r.requested == 10, "6-4 counts");
  }
  {
    // 5-5: Competence votes first, so it wins the tie.
    providers::ScriptedChatProvider chat;
    std::vector<std::string> script;
    for (int i = 0; i < 5; ++i) {
      script.push_back("I would say Competence.");
      script.push_back("ruggedness");
    }
    chat.push(script);
    const metrics::JudgeResult r = metrics::judge_personality(chat, "a caption", 10);
    c.expect(r.votes[index_of(Personality::kCompetence)] == 5 && r.votes[index_of(Personality::kRuggedness)] == 5,
             "5-5 tally");
    c.expect(r.personality == Personality::kCompetence, "5-5 tie to earliest vote");
  }
  {
    providers::ScriptedChatProvider chat;
    std::vector<std::string> script = {"Ruggedness"};
    for (int i = 0; i < 5; ++i) script.push_back("Competence");
    for (int i = 0; i < 4; ++i) script.push_back("Ruggedness");
    chat.push(script);
    const metrics::JudgeResult r = metrics::judge_personality(chat, "a caption", 10);
    c.expect(r.personality == Personality::kRuggedness, "5-5 tie, reversed order");
  }
  {
    providers::ScriptedChatProvider chat;
    chat.push(repeat("no idea", 10));
    c.expect(kind_of([&] { metrics::judge_personality(chat, "a caption", 10); }) == ErrorKind::kAllUnparseable,
             "all unparseable");
  }
}

// ---- 5 ----

void heatmap_law(Check& c) {
  SeededRng rng(1234);
  for (int i = 0; i < 100; ++i) {
    ConfusionMatrix m;
    for (Personality a : kAllPersonalities) {
      for (Personality p : kAllPersonalities) m.add(a, p, static_cast<std::int64_t>(rng.uniform(50)));
    }
    c.expect(metrics::heatmap_mse(m, m) == 0.0, "mse(m, m) case " + std::to_string(i));
  }
  for (std::int64_t d : {1, 2, 5, 10}) {
    ConfusionMatrix a;
    ConfusionMatrix b;
    a.add(Personality::kCompetence, Personality::kRuggedness, 7);
    b.add(Personality::kCompetence, Personality::kRuggedness, 7 + d);
    const double want = static_cast<double>(d * d) / 25.0;
    c.expect(metrics::heatmap_mse(a, b) == want, "single-cell delta " + std::to_string(d));
  }
  ConfusionMatrix a;
  ConfusionMatrix b;
  b.add(Personality::kSincerity, Personality::kSincerity, 5);
  c.expect(metrics::heatmap_mse(a, b) == 1.0, "delta 5 gives 1.0");
}

// ---- 6 ----

void dataset_rules(Check& c) {
  const std::vector<PostRecord> records =
      dataset::parse_post_records(dataset::read_text_file(std::string(testing::kPosts20)), BrandMap::bundled());
  c.expect(records.size() == testing::kPosts20Audit.size(), "fixture has 20 records");
  const dataset::CleanResult cleaned = dataset::clean(records);
  std::map<std::string, std::optional<dataset::DropReason>> got;
  for (const PostRecord& r : cleaned.kept) got[r.id] = std::nullopt;
  for (const dataset::DroppedRecord& d : cleaned.dropped) got[d.record.id] = d.reason;
  for (const auto& [id, reason] : testing::kPosts20Audit) {
    const auto it = got.find(std::string(id));
    c.expect(it != got.end() && it->second == reason, "audit " + std::string(id));
  }

  const dataset::CleanResult again = dataset::clean(cleaned.kept);
  c.expect(again.kept == cleaned.kept && again.dropped.empty(), "clean is idempotent");

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const dataset::SplitSet s = dataset::assign_splits(cleaned.kept, BrandMap::bundled(),
                                                        dataset::kDefaultValFraction, seed * 7919 + 3);
    const auto held_out = [](const PostRecord& r) { return BrandMap::bundled().at(r.brand).held_out_for_test; };
    bool leak = false;
    for (const PostRecord& r : s.train) leak = leak || held_out(r);
    for (const PostRecord& r : s.validation) leak = leak || held_out(r);
    for (const PostRecord& r : s.test) leak = leak || !held_out(r);
    std::size_t expected_test = 0;
    for (const PostRecord& r : cleaned.kept) expected_test += held_out(r) ? 1 : 0;
    c.expect(!leak && s.test.size() == expected_test, "no leakage for seed " + std::to_string(seed));
    c.expect(s.train.size() + s.validation.size() + s.test.size() == cleaned.kept.size(),
             "splits partition the kept records");
  }
}

// ---- 7 ----

void emoji_round_trip(Check& c) {
  const textproc::EmojiTable& t = textproc::EmojiTable::bundled();
  const std::vector<std::string> words = {"love", "this", " ", "sale", "!", "nyc", "\n", "caf\xC3\xA9", "10:30"};
  SeededRng rng(777);
  for (int i = 0; i < 500; ++i) {
    std::string s;
    std::string codes;
    for (std::size_t p = 0, n = 1 + rng.uniform(8); p < n; ++p) {
      if (rng.uniform(2) == 0) {
        const textproc::EmojiTable::Entry& e = t.entries()[rng.uniform(t.size())];
        s += e.emoji;
        codes += e.shortcode;
      } else {
        const std::string& w = words[rng.uniform(words.size())];
        s += w;
        codes += w;
      }
    }
    c.expect(textproc::emojize(textproc::demojize(s)) == s, "emojize(demojize(s)) case " + std::to_string(i));
    c.expect(textproc::demojize(textproc::emojize(codes)) == codes,
             "demojize(emojize(t)) case " + std::to_string(i));
  }
}

// ---- 8 ----

std::string mock_end_to_end_report(int threads) {
  const interfaces::AppConfig cfg =
      interfaces::resolve_config({}, [](std::string_view) { return std::optional<std::string>(); }, {});
  const std::vector<PostRecord> records =
      dataset::parse_post_records(dataset::read_text_file("eval/test10.jsonl"), BrandMap::bundled());
  const textproc::HeuristicEntityExtractor entities;
  std::vector<interfaces::GenerateInput> inputs;
  for (const PostRecord& r : records) {
    inputs.push_back(interfaces::input_from_record(r, entities, PromptVariant::kSelective, 0));
  }
  const providers::ProviderSet ps = providers::make_provider_set(cfg.provider);
  const interfaces::GenerationService service(ps, cfg.pipeline, {}, cfg.seed);
  const std::vector<GeneratedCaption> generated = service.generate_batch(inputs, threads);

  std::vector<metrics::EvalItem> items;
  for (std::size_t i = 0; i < records.size(); ++i) {
    metrics::EvalItem item;
    item.record = records[i];
    item.generated = generated[i];
    item.request = generated[i].request;
    item.ground_truth = records[i].caption;
    items.push_back(std::move(item));
  }
  metrics::EvalOptions opts;
  opts.model = cfg.provider.chat_model;
  opts.threads = threads;
  opts.judge_n = cfg.judge_n;
  opts.judge_params = cfg.pipeline.chat;
  return metrics::report_to_json(metrics::evaluate_run(ps, items, opts)).dump(2) + "\n";
}

void end_to_end_determinism(Check& c) {
  const std::string first = mock_end_to_end_report(1);
  const std::string second = mock_end_to_end_report(1);
  const std::string parallel = mock_end_to_end_report(4);
  c.expect(first == second, "two runs are byte-identical");
  c.expect(first == parallel, "1 and 4 threads are byte-identical");
  c.expect(first == dataset::read_text_file("golden/eval_report10.json"), "report equals the frozen golden");
}

// ---- 9 ----

void tonality_suppression(Check& c) {
  CaptionRequest req;
  req.description = "a hiker standing on a rocky summit at sunrise";
  req.personality = Personality::kRuggedness;
  req.attributes.hashtags = {"#NeverStopExploring"};
  {
    providers::ScriptedChatProvider chat;
    chat.push({"Rugged trails, rugged gear. #NeverStopExploring"});
    chat.push({"Summit at sunrise, boots still muddy. #NeverStopExploring"});
    const GeneratedCaption g = pipeline::generate_caption(chat, validate_request(req), {}, {});
    c.expect(!textproc::contains_tonality_word(g.text, req.personality), "clean caption returned");
    c.expect(g.tonality_clean, "tonality_clean set");
    c.expect(g.regenerations >= 1 && g.regenerations <= 2, "at most two regenerations");
  }
  {
    providers::ScriptedChatProvider chat;
    chat.push({"So ruggedly built."});
    chat.push({"Built like a RUGGED classic."});
    chat.push({"Dawn on the ridge."});
    const GeneratedCaption g = pipeline::generate_caption(chat, validate_request(req), {}, {});
    c.expect(g.tonality_clean && g.regenerations == 2, "clean on the last allowed attempt");
  }

  struct StemCase {
    std::string_view text;
    Personality personality;
    bool contains;
  };
  static constexpr StemCase kCases[] = {
      {"Sincerely yours, the team", Personality::kSincerity, true},
      {"our SINCERE thanks", Personality::kSincerity, true},
      {"insincere apologies", Personality::kSincerity, false},
      {"honest and warm", Personality::kSincerity, false},
      {"with sincerity.", Personality::kSincerity, true},
      {"So EXCITED for Friday!", Personality::kExcitement, true},
      {"an exciting drop", Personality::kExcitement, true},
      {"unexcited crowds", Personality::kExcitement, false},
      {"daring new colors", Personality::kExcitement, false},
      {"pure excitement", Personality::kExcitement, true},
      {"competently made", Personality::kCompetence, true},
      {"a competent team", Personality::kCompetence, true},
      {"incompetent rivals", Personality::kCompetence, false},
      {"reliable every day", Personality::kCompetence, false},
      {"core competencies", Personality::kCompetence, true},
      {"Sophisticated evenings", Personality::kSophistication, true},
      {"sophistication, redefined", Personality::kSophistication, true},
      {"unsophisticated fun", Personality::kSophistication, false},
      {"charming details", Personality::kSophistication, false},
      {"#sophisticatedstyle", Personality::kSophistication, true},
      {"Ruggedness meets comfort", Personality::kRuggedness, true},
      {"ruggedly handsome", Personality::kRuggedness, true},
      {"a tough truck", Personality::kRuggedness, false},
      {"rug cleaning day", Personality::kRuggedness, false},
      {"built-rugged", Personality::kRuggedness, true},
  };
  for (const StemCase& s : kCases) {
    c.expect(textproc::contains_tonality_word(s.text, s.personality) == s.contains,
             "stem case '" + std::string(s.text) + "'");
  }
}

// ---- 10 ----

void live_smoke(Check& c) {
  const interfaces::AppConfig cfg = interfaces::resolve_config({}, interfaces::process_env, {});
  if (cfg.provider.base_url.empty()) {
    c.skip("PROVIDER_BASE_URL is not set");
    return;
  }
  const std::vector<prompting::ShotExample> shots =
      dataset::parse_shots(dataset::read_text_file("eval/shots.jsonl"));
  std::vector<interfaces::GenerateInput> inputs;
  dataset::for_each_jsonl(dataset::read_text_file("eval/live_requests.jsonl"), [&](const auto& j, int line) {
    const interfaces::ParsedInput p = interfaces::parse_generate_input(j, PromptVariant::kSelective, 1);
    c.expect(p.errors.empty(), "request line " + std::to_string(line));
    inputs.push_back(p.input);
  });
  const interfaces::GenerationService service(providers::make_provider_set(cfg.provider), cfg.pipeline, shots,
                                              cfg.seed);
  const std::vector<GeneratedCaption> out = service.generate_batch(inputs, std::max(cfg.threads, 4));
  std::vector<metrics::CoverageRow> rows;
  for (std::size_t i = 0; i < out.size(); ++i) {
    c.expect(!trim(out[i].text).empty(), "non-empty caption for " + inputs[i].id);
    rows.push_back({inputs[i].attributes, textproc::attribute_presence(out[i].text, inputs[i].attributes)});
  }
  const metrics::CoverageReport cov = metrics::coverage(rows);
  for (AttributeKind kind : {AttributeKind::kHashtags, AttributeKind::kUsernames}) {
    const std::optional<double> pct = cov.of(kind).percent;
    c.expect(pct.has_value() && *pct >= 70.0,
             std::string(report_key(kind)) + " coverage " + (pct ? fmt(*pct) : std::string("n/a")));
  }
}

struct Criterion {
  int number;
  std::string_view name;
  double budget_seconds;
  std::function<void(Check&)> run;
};

}  // namespace
}  // namespace brandcap::acceptance

int main() {
  using namespace brandcap::acceptance;
  std::filesystem::current_path(BRANDCAP_FIXTURE_DIR);

  const std::vector<Criterion> criteria = {
      {1, "golden prompt fidelity", 1.0, golden_prompts},
      {2, "metric oracles", 10.0, metric_oracles},
      {3, "coverage semantics", 5.0, coverage_semantics},
      {4, "judge majority vote", 1.0, judge_votes},
      {5, "heatmap mse law", 1.0, heatmap_law},
      {6, "dataset rules", 2.0, dataset_rules},
      {7, "emoji round trip", 2.0, emoji_round_trip},
      {8, "end-to-end determinism", 5.0, end_to_end_determinism},
      {9, "tonality suppression", 1.0, tonality_suppression},
      {10, "live smoke", 120.0, live_smoke},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.budget_seconds) check.expect(false, "over budget of " + fmt(cr.budget_seconds) + " s");

    const char* verdict = check.failed() ? "FAIL" : check.skipped() ? "SKIP" : "PASS";
    std::printf("[%s] %2d %-24s %8.3f s", verdict, cr.number, std::string(cr.name).c_str(), secs);
    if (check.failed()) {
      std::printf("  ");
      for (std::size_t i = 0; i < check.failures().size(); ++i) {
        std::printf("%s%s", i ? "; " : "", check.failures()[i].c_str());
      }
    } else if (check.skipped()) {
      std::printf("  %s", check.skipped()->c_str());
    }
    std::printf("\n");
    failed += check.failed() ? 1 : 0;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

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

#include "brandcap/interfaces/cli.h"

#include <CLI11.hpp>

#include <csignal>
#include <filesystem>
#include <map>
#include <ostream>

#include "brandcap/core/brand_map.h"
#include "brandcap/core/error.h"
#include "brandcap/core/parallel.h"
#include "brandcap/core/json_codec.h"
#include "brandcap/dataset/dataset.h"
#include "brandcap/dataset/io.h"
#include "brandcap/interfaces/config.h"
#include "brandcap/interfaces/server.h"
#include "brandcap/interfaces/service.h"
#include "brandcap/metrics/evaluate.h"
#include "brandcap/providers/factory.h"

namespace brandcap::interfaces {
namespace {

namespace fs = std::filesystem;
using dataset::read_text_file;
using dataset::write_text_file;

// Global flags that map onto config keys.
constexpr std::string_view kFlagKeys[] = {"base_url",         "chat_model",    "embed_text_model",
                                          "embed_image_model", "caption_model", "cache_dir",
                                          "max_inflight",      "seed",          "threads",
                                          "shot_pool",         "judge_n",       "max_regenerations"};

std::string flag_name(std::string_view key) {
  std::string f = "--" + std::string(key);
  for (char& c : f) c = c == '_' ? '-' : c;
  return f;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string config_path;
  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> flag_options;

  AppConfig config() const {
    KeyValues flags;
    for (const auto& [key, opt] : flag_options) {
      if (opt->count() > 0) flags[key] = flag_values.at(key);
    }
    const KeyValues file = config_path.empty() ? KeyValues{} : parse_config_file(read_text_file(config_path));
    return resolve_config(flags, process_env, file);
  }

  void emit(const std::string& path, const std::string& content) const {
    if (path.empty() || path == "-") {
      out << content;
    } else {
      write_text_file(path, content);
    }
  }
};

std::vector<prompting::ShotExample> load_shot_pool(const AppConfig& c) {
  if (c.shot_pool.empty()) return {};
  return dataset::parse_shots(read_text_file(c.shot_pool));
}

GenerationService make_service(const AppConfig& c) {
  return GenerationService(providers::make_provider_set(c.provider), c.pipeline, load_shot_pool(c), c.seed);
}

// ---- generate ----

struct GenerateArgs {
  std::string image;
  std::string description;
  std::string personality;
  std::vector<std::string> hashtags;
  std::vector<std::string> usernames;
  std::vector<std::string> urls;
  std::vector<std::string> entities;
  std::string variant;
  int shots = -1;
  std::string id;
  std::string batch;
  std::string out = "-";
  CLI::Option* image_opt = nullptr;
  CLI::Option* description_opt = nullptr;
};

int run_generate(const Context& ctx, const GenerateArgs& a) {
  const AppConfig cfg = ctx.config();
  const PromptVariant default_variant = a.variant.empty() ? cfg.pipeline.variant : variant_from_string(a.variant);
  const int default_shots = a.shots >= 0 ? a.shots : cfg.pipeline.shots;
  std::vector<GenerateInput> inputs;
  if (!a.batch.empty()) {
    dataset::for_each_jsonl(read_text_file(a.batch), [&](const Json& j, int line) {
      const ParsedInput p = parse_generate_input(j, default_variant, default_shots);
      if (!p.errors.empty()) {
        raise(ErrorKind::kSchemaError,
              "line " + std::to_string(line) + ": " + p.errors.front().field + ": " + p.errors.front().message);
      }
      inputs.push_back(p.input);
    });
  } else {
    // Built as JSON so the CLI goes through the same validation as HTTP.
    Json body;
    if (!a.id.empty()) body["id"] = a.id;
    if (a.image_opt->count() > 0) body["image_ref"] = a.image;
    if (a.description_opt->count() > 0) body["description"] = a.description;
    if (!a.personality.empty()) body["personality"] = a.personality;
    body["attributes"] = {{"hashtags", a.hashtags},
                          {"usernames", a.usernames},
                          {"urls", a.urls},
                          {"named_entities", a.entities}};
    const ParsedInput p = parse_generate_input(body, default_variant, default_shots);
    if (!p.errors.empty()) {
      const ErrorKind kind = p.errors.front().field == "personality" && !a.personality.empty()
                                 ? ErrorKind::kUnknownPersonality
                                 : ErrorKind::kPreconditionViolation;
      raise(kind, p.errors.front().field + ": " + p.errors.front().message);
    }
    inputs.push_back(p.input);
  }
  const GenerationService service = make_service(cfg);
  const std::vector<GeneratedCaption> results = service.generate_batch(inputs, cfg.threads);
  std::string text;
  for (const GeneratedCaption& g : results) text += json_codec::to_json(g).dump() + "\n";
  ctx.emit(a.out, text);
  return kExitOk;
}

// ---- evaluate ----

struct EvaluateArgs {
  std::string inputs;
  std::string dataset;
  bool skip_clipscore = false;
  bool skip_geval = false;
  std::string out = "-";
  std::string table;
  std::string model;
};

int run_evaluate(const Context& ctx, const EvaluateArgs& a) {
  const AppConfig cfg = ctx.config();
  std::vector<metrics::EvalItem> items;
  dataset::for_each_jsonl(read_text_file(a.inputs), [&](const Json& j, int) {
    metrics::EvalItem item;
    item.generated = json_codec::generated_caption_from_json(j);
    item.request = item.generated.request;
    items.push_back(std::move(item));
  });
  std::map<std::string, PostRecord> by_id;
  if (!a.dataset.empty()) {
    for (PostRecord& r : dataset::parse_post_records(read_text_file(a.dataset), BrandMap::bundled())) {
      by_id.emplace(r.id, std::move(r));
    }
  }
  std::vector<std::string> unmatched;
  for (metrics::EvalItem& item : items) {
    const auto it = by_id.find(item.request.id);
    if (it == by_id.end()) {
      if (!a.dataset.empty()) unmatched.push_back(item.request.id);
      continue;
    }
    item.record = it->second;
    item.ground_truth = it->second.caption;
  }

  const providers::ProviderSet ps = providers::make_provider_set(cfg.provider);
  metrics::EvalOptions opts;
  opts.model = a.model.empty() ? cfg.provider.chat_model : a.model;
  opts.skip_clipscore = a.skip_clipscore;
  opts.skip_geval = a.skip_geval;
  opts.judge_n = cfg.judge_n;
  opts.threads = cfg.threads;
  opts.judge_params = cfg.pipeline.chat;
  metrics::EvalReport report = metrics::evaluate_run(ps, items, opts);
  for (const std::string& id : unmatched) {
    report.warnings.push_back((id.empty() ? std::string("<no id>") : id) + ": no matching dataset record");
  }
  for (const std::string& w : report.warnings) ctx.err << "warning: " << w << "\n";

  const std::string table = metrics::report_to_text(report);
  ctx.emit(a.out, metrics::report_to_json(report).dump(2) + "\n");
  if (!a.table.empty()) write_text_file(a.table, table);
  if (a.out != "-" && !a.out.empty()) ctx.out << table;
  return kExitOk;
}

// ---- dataset ----

struct DatasetArgs {
  std::string in;
  std::string out = "-";
  std::string out_dir;
  std::string dir;
  double val_fraction = dataset::kDefaultValFraction;
  int per_personality = 50;
  std::string variant;
  int shots = -1;
  std::string brand;
};

std::vector<PostRecord> load_records(const std::string& path) {
  return dataset::parse_post_records(read_text_file(path), BrandMap::bundled());
}

int run_prepare(const Context& ctx, const DatasetArgs& a) {
  const AppConfig cfg = ctx.config();
  const std::vector<PostRecord> records = load_records(a.in);
  const dataset::CleanResult c = dataset::clean(records);
  const dataset::SplitSet s = dataset::assign_splits(c.kept, BrandMap::bundled(), a.val_fraction, cfg.seed);
  const fs::path dir(a.out_dir);
  write_text_file(dir / "train.jsonl", dataset::post_records_to_jsonl(s.train));
  write_text_file(dir / "validation.jsonl", dataset::post_records_to_jsonl(s.validation));
  write_text_file(dir / "test.jsonl", dataset::post_records_to_jsonl(s.test));
  std::string dropped;
  for (const dataset::DroppedRecord& d : c.dropped) {
    dropped += Json{{"id", d.record.id}, {"reason", dataset::drop_reason_name(d.reason)}}.dump() + "\n";
  }
  write_text_file(dir / "dropped.jsonl", dropped);
  const std::string table = dataset::format_stats(dataset::stats(s));
  write_text_file(dir / "stats.txt", table);
  ctx.out << "kept " << c.kept.size() << " dropped " << c.dropped.size() << "\n" << table;
  return kExitOk;
}

int run_stats(const Context& ctx, const DatasetArgs& a) {
  const fs::path dir(a.dir);
  dataset::SplitSet s;
  s.train = load_records((dir / "train.jsonl").string());
  s.validation = load_records((dir / "validation.jsonl").string());
  s.test = load_records((dir / "test.jsonl").string());
  ctx.emit(a.out, dataset::format_stats(dataset::stats(s)));
  return kExitOk;
}

int run_sample(const Context& ctx, const DatasetArgs& a) {
  const AppConfig cfg = ctx.config();
  dataset::SplitSet s;
  s.test = load_records(a.in);
  ctx.emit(a.out, dataset::post_records_to_jsonl(dataset::sample_test(s, a.per_personality, cfg.seed)));
  return kExitOk;
}

std::vector<dataset::TrainingPair> build_pairs(const Context& ctx, const DatasetArgs& a) {
  const AppConfig cfg = ctx.config();
  const PromptVariant variant = a.variant.empty() ? cfg.pipeline.variant : variant_from_string(a.variant);
  const std::vector<PostRecord> records = load_records(a.in);
  const providers::ProviderSet ps = providers::make_provider_set(cfg.provider);
  const textproc::HeuristicEntityExtractor entities;
  std::vector<dataset::TrainingPair> pairs(records.size());
  parallel_for(records.size(), cfg.threads, [&](std::size_t i) {
    const PostRecord& r = records[i];
    std::optional<std::string> desc = r.description;
    if ((!desc || desc->empty()) && r.image_ref && providers::is_resolvable_image(*r.image_ref)) {
      desc = ps.captioner->describe_image(*r.image_ref, ps.caption_model);
    }
    pairs[i] = dataset::build_training_pair(r, variant, entities, desc);
  });
  return pairs;
}

int run_build_pairs(const Context& ctx, const DatasetArgs& a) {
  std::string text;
  for (const dataset::TrainingPair& p : build_pairs(ctx, a)) text += dataset::to_json(p).dump() + "\n";
  ctx.emit(a.out, text);
  return kExitOk;
}

int run_build_shots(const Context& ctx, const DatasetArgs& a) {
  std::string text;
  for (const dataset::TrainingPair& p : build_pairs(ctx, a)) {
    text += dataset::to_json(dataset::to_shot(p)).dump() + "\n";
  }
  ctx.emit(a.out, text);
  return kExitOk;
}

int run_build_requests(const Context& ctx, const DatasetArgs& a) {
  const AppConfig cfg = ctx.config();
  const PromptVariant variant = a.variant.empty() ? cfg.pipeline.variant : variant_from_string(a.variant);
  const int shots = a.shots >= 0 ? a.shots : cfg.pipeline.shots;
  const textproc::HeuristicEntityExtractor entities;
  std::string text;
  for (const PostRecord& r : load_records(a.in)) {
    text += to_json(input_from_record(r, entities, variant, shots)).dump() + "\n";
  }
  ctx.emit(a.out, text);
  return kExitOk;
}

int run_import(const Context& ctx, const DatasetArgs& a) {
  std::vector<PostRecord> records;
  dataset::for_each_jsonl(read_text_file(a.in), [&](const Json& j, int) {
    records.push_back(dataset::import_export_record(j, BrandMap::bundled(), a.brand));
  });
  ctx.emit(a.out, dataset::post_records_to_jsonl(records));
  return kExitOk;
}

// ---- serve ----

CaptionServer* g_server = nullptr;

void stop_server(int) {
  if (g_server != nullptr) g_server->stop();
}

int run_serve(const Context& ctx, const std::string& host, int port) {
  const AppConfig cfg = ctx.config();
  const GenerationService service = make_service(cfg);
  CaptionServer server(service, cfg.provider.max_inflight);
  const int bound = server.bind(host, port);
  if (bound < 0) raise(ErrorKind::kIoError, "cannot bind " + host + ":" + std::to_string(port));
  ctx.err << "listening on http://" << host << ":" << bound << "\n";
  g_server = &server;
  std::signal(SIGINT, stop_server);
  std::signal(SIGTERM, stop_server);
  server.listen();
  g_server = nullptr;
  return kExitOk;
}

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Brand-personality caption generation and evaluation", "brandcap");
  app.require_subcommand(1);
  // Global flags may also follow the subcommand.
  app.fallthrough();
  Context ctx{out, err, {}, {}, {}};
  app.add_option("--config", ctx.config_path, "Flat key = value config file");
  for (std::string_view key : kFlagKeys) {
    const std::string k(key);
    ctx.flag_values[k];
    ctx.flag_options[k] = app.add_option(flag_name(key), ctx.flag_values[k]);
  }

  std::function<int()> action;

  GenerateArgs g;
  CLI::App* gen = app.add_subcommand("generate", "Generate a caption for one image or description, or a batch");
  g.image_opt = gen->add_option("--image", g.image, "Image path or URL");
  g.description_opt = gen->add_option("--description", g.description, "One-line image description");
  g.image_opt->excludes(g.description_opt);
  gen->add_option("--personality", g.personality);
  gen->add_option("--hashtag", g.hashtags)->take_all();
  gen->add_option("--username", g.usernames)->take_all();
  gen->add_option("--url", g.urls)->take_all();
  gen->add_option("--entity", g.entities)->take_all();
  gen->add_option("--variant", g.variant, "selective or non-selective");
  gen->add_option("--shots", g.shots, "In-context examples, 0 to 4");
  gen->add_option("--id", g.id);
  gen->add_option("--batch", g.batch, "JSONL of generation inputs");
  gen->add_option("--out", g.out, "Output path, - for stdout");
  gen->callback([&] { action = [&] { return run_generate(ctx, g); }; });

  EvaluateArgs e;
  CLI::App* ev = app.add_subcommand("evaluate", "Score generated captions");
  ev->add_option("--inputs", e.inputs, "Generated captions JSONL")->required();
  ev->add_option("--dataset", e.dataset, "Test records JSONL supplying ground truth");
  ev->add_flag("--skip-clipscore", e.skip_clipscore);
  ev->add_flag("--skip-geval", e.skip_geval);
  ev->add_option("--out", e.out, "Report JSON path, - for stdout");
  ev->add_option("--table", e.table, "Also write the text table here");
  ev->add_option("--model", e.model, "Row label in the report");
  ev->callback([&] { action = [&] { return run_evaluate(ctx, e); }; });

  DatasetArgs d;
  CLI::App* ds = app.add_subcommand("dataset", "Prepare and inspect post datasets");
  ds->require_subcommand(1);
  ds->fallthrough();
  CLI::App* prep = ds->add_subcommand("prepare", "Clean and split posts");
  prep->add_option("--in", d.in)->required();
  prep->add_option("--out-dir", d.out_dir)->required();
  prep->add_option("--val-fraction", d.val_fraction);
  prep->callback([&] { action = [&] { return run_prepare(ctx, d); }; });
  CLI::App* st = ds->add_subcommand("stats", "Per-personality split counts");
  st->add_option("--dir", d.dir, "Directory with train/validation/test.jsonl")->required();
  st->add_option("--out", d.out);
  st->callback([&] { action = [&] { return run_stats(ctx, d); }; });
  CLI::App* sm = ds->add_subcommand("sample", "Seeded per-personality test sample");
  sm->add_option("--in", d.in, "Test split JSONL")->required();
  sm->add_option("--per-personality", d.per_personality);
  sm->add_option("--out", d.out);
  sm->callback([&] { action = [&] { return run_sample(ctx, d); }; });
  CLI::App* bp = ds->add_subcommand("build-pairs", "Instruction/target training pairs");
  bp->add_option("--in", d.in)->required();
  bp->add_option("--variant", d.variant);
  bp->add_option("--out", d.out);
  bp->callback([&] { action = [&] { return run_build_pairs(ctx, d); }; });
  CLI::App* bs = ds->add_subcommand("build-shots", "In-context example pool");
  bs->add_option("--in", d.in)->required();
  bs->add_option("--out", d.out);
  bs->callback([&] { action = [&] { return run_build_shots(ctx, d); }; });
  CLI::App* br = ds->add_subcommand("build-requests", "Generation inputs from held-out posts");
  br->add_option("--in", d.in)->required();
  br->add_option("--variant", d.variant);
  br->add_option("--shots", d.shots);
  br->add_option("--out", d.out);
  br->callback([&] { action = [&] { return run_build_requests(ctx, d); }; });
  CLI::App* im = ds->add_subcommand("import", "Convert a post export to records");
  im->add_option("--in", d.in)->required();
  im->add_option("--brand", d.brand, "Brand for every record; default owner_username");
  im->add_option("--out", d.out);
  im->callback([&] { action = [&] { return run_import(ctx, d); }; });

  std::string host = "127.0.0.1";
  int port = 8080;
  CLI::App* sv = app.add_subcommand("serve", "HTTP service for POST /v1/captions");
  sv->add_option("--host", host);
  sv->add_option("--port", port);
  sv->callback([&] { action = [&] { return run_serve(ctx, host, port); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "brandcap: " << one_line(ex.what()) << "\n";
    return kExitUserError;
  }

  try {
    return action ? action() : kExitUserError;
  } catch (const Error& ex) {
    err << "brandcap: " << one_line(ex.what()) << "\n";
    return is_provider_error(ex.kind()) ? kExitProviderError : kExitUserError;
  } catch (const std::exception& ex) {
    err << "brandcap: " << one_line(ex.what()) << "\n";
    return kExitProviderError;
  }
}

}  // namespace brandcap::interfaces

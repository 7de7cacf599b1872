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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "brandcap/pipeline/pipeline.h"
#include "brandcap/providers/factory.h"

namespace brandcap::interfaces {

struct AppConfig {
  providers::ProviderSettings provider;
  pipeline::PipelineConfig pipeline;
  // JSONL pool of in-context examples; empty means no shots are available.
  std::string shot_pool;
  std::uint64_t seed = 0;
  int threads = 1;
  int judge_n = 10;
};

// Keys of the flat config file, one "key = value" per line, '#' comments.
// Flags use the same names with '-' instead of '_'.
inline constexpr std::string_view kConfigKeys[] = {
    "base_url",   "api_key",   "chat_model", "embed_text_model", "embed_image_model", "caption_model",
    "cache_dir",  "max_inflight", "seed",    "threads",          "shot_pool",         "variant",
    "shots",      "temperature", "top_p",    "judge_n",          "max_regenerations"};

using KeyValues = std::map<std::string, std::string, std::less<>>;
using EnvLookup = std::function<std::optional<std::string>(std::string_view name)>;

// Errors: kSchemaError naming the line for malformed lines or unknown keys.
KeyValues parse_config_file(std::string_view text);

// Environment variable for a config key, if it has one (e.g. base_url ->
// PROVIDER_BASE_URL).
std::optional<std::string_view> env_var_for(std::string_view key);

std::optional<std::string> process_env(std::string_view name);

// Per key: flag, then environment, then file, then the built-in default.
// Errors: kSchemaError for values that do not parse.
AppConfig resolve_config(const KeyValues& flags, const EnvLookup& env, const KeyValues& file);

}  // namespace brandcap::interfaces

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

#include "brandcap/interfaces/config.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "brandcap/core/error.h"
#include "brandcap/core/strings.h"

namespace brandcap::interfaces {
namespace {

bool known_key(std::string_view key) {
  return std::find(std::begin(kConfigKeys), std::end(kConfigKeys), key) != std::end(kConfigKeys);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size()) {
    raise(ErrorKind::kSchemaError, "config '" + std::string(key) + "': '" + std::string(value) + "' is not a number");
  }
  return out;
}

}  // namespace

KeyValues parse_config_file(std::string_view text) {
  KeyValues out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      raise(ErrorKind::kSchemaError, "config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (!known_key(key)) {
      raise(ErrorKind::kSchemaError, "config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    out[key] = std::string(trim(line.substr(eq + 1)));
  }
  return out;
}

std::optional<std::string_view> env_var_for(std::string_view key) {
  static const std::map<std::string_view, std::string_view> kEnv = {
      {"base_url", "PROVIDER_BASE_URL"},
      {"api_key", "PROVIDER_API_KEY"},
      {"chat_model", "CHAT_MODEL"},
      {"embed_text_model", "EMBED_TEXT_MODEL"},
      {"embed_image_model", "EMBED_IMAGE_MODEL"},
      {"caption_model", "CAPTION_MODEL"},
      {"cache_dir", "CACHE_DIR"},
      {"max_inflight", "MAX_INFLIGHT"},
  };
  if (auto it = kEnv.find(key); it != kEnv.end()) return it->second;
  return std::nullopt;
}

std::optional<std::string> process_env(std::string_view name) {
  const char* v = std::getenv(std::string(name).c_str());
  if (v == nullptr) return std::nullopt;
  return std::string(v);
}

AppConfig resolve_config(const KeyValues& flags, const EnvLookup& env, const KeyValues& file) {
  const auto lookup = [&](std::string_view key) -> std::optional<std::string> {
    if (auto it = flags.find(key); it != flags.end()) return it->second;
    if (auto var = env_var_for(key); var && env) {
      if (auto v = env(*var)) return v;
    }
    if (auto it = file.find(key); it != file.end()) return it->second;
    return std::nullopt;
  };

  AppConfig c;
  providers::ProviderSettings& p = c.provider;
  const auto set_string = [&](std::string_view key, std::string& field) {
    if (auto v = lookup(key)) field = *v;
  };
  set_string("base_url", p.base_url);
  set_string("api_key", p.api_key);
  set_string("chat_model", p.chat_model);
  set_string("embed_text_model", p.embed_text_model);
  set_string("embed_image_model", p.embed_image_model);
  set_string("caption_model", p.caption_model);
  set_string("cache_dir", p.cache_dir);
  set_string("shot_pool", c.shot_pool);
  if (auto v = lookup("max_inflight")) p.max_inflight = parse_number<int>("max_inflight", *v);
  if (auto v = lookup("seed")) c.seed = parse_number<std::uint64_t>("seed", *v);
  p.seed = c.seed;
  if (auto v = lookup("threads")) c.threads = std::max(1, parse_number<int>("threads", *v));
  if (auto v = lookup("judge_n")) c.judge_n = parse_number<int>("judge_n", *v);
  if (auto v = lookup("variant")) {
    try {
      c.pipeline.variant = variant_from_string(*v);
    } catch (const Error& e) {
      raise(ErrorKind::kSchemaError, std::string("config 'variant': ") + e.what());
    }
  }
  if (auto v = lookup("shots")) c.pipeline.shots = parse_number<int>("shots", *v);
  if (auto v = lookup("temperature")) c.pipeline.chat.temperature = parse_number<double>("temperature", *v);
  if (auto v = lookup("top_p")) c.pipeline.chat.top_p = parse_number<double>("top_p", *v);
  if (auto v = lookup("max_regenerations")) {
    c.pipeline.max_regenerations = parse_number<int>("max_regenerations", *v);
  }
  c.pipeline.chat.model_id = p.chat_model;
  return c;
}

}  // namespace brandcap::interfaces

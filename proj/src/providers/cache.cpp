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

#include "brandcap/providers/cache.h"

#include <openssl/evp.h>

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include "brandcap/core/error.h"

namespace brandcap::providers {
namespace {

using Json = nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::kIoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json embedding_to_json(const Embedding& e) { return Json{{"model_id", e.model_id}, {"vector", e.vector}}; }

std::optional<Embedding> embedding_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vector") || !j["vector"].is_array()) return std::nullopt;
  Embedding e;
  e.model_id = j.value("model_id", "");
  for (const Json& v : j["vector"]) {
    if (!v.is_number()) return std::nullopt;
    e.vector.push_back(v.get<double>());
  }
  return e;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    raise(ErrorKind::kIoError, "SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::string cache_key(std::string_view kind, std::string_view model_id, std::string_view payload) {
  std::string material(kCacheVersion);
  material += '\n';
  material += kind;
  material += '\n';
  material += model_id;
  material += '\n';
  material += payload;
  return sha256_hex(material);
}

ResponseCache::ResponseCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResponseCache::path_for(const std::string& key) const {
  return dir_ / "v1" / key.substr(0, 2) / (key + ".json");
}

std::optional<Json> ResponseCache::get(const std::string& key) const {
  std::string text;
  if (on_disk()) {
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::lock_guard lock(mu_);
    auto it = memory_.find(key);
    if (it == memory_.end()) return std::nullopt;
    text = it->second;
  }
  // A torn or foreign file is treated as a miss and overwritten later.
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return std::nullopt;
  return j;
}

void ResponseCache::put(const std::string& key, const Json& value) {
  const std::string text = value.dump();
  if (!on_disk()) {
    std::lock_guard lock(mu_);
    memory_[key] = text;
    return;
  }
  static std::atomic<std::uint64_t> counter{0};
  const std::filesystem::path final_path = path_for(key);
  std::error_code ec;
  std::filesystem::create_directories(final_path.parent_path(), ec);
  if (ec) raise(ErrorKind::kIoError, "cannot create cache directory " + final_path.parent_path().string());
  std::ostringstream tmp_name;
  tmp_name << key << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
  const std::filesystem::path tmp = final_path.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) raise(ErrorKind::kIoError, "cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    raise(ErrorKind::kIoError, "cannot publish cache entry " + final_path.string());
  }
}

std::string chat_payload(const ChatRequest& request) {
  Json messages = Json::array();
  for (const ChatMessage& m : request.messages) messages.push_back({{"role", m.role}, {"content", m.content}});
  const ChatParams& p = request.params;
  const Json j = {{"messages", messages},
                  {"temperature", p.temperature},
                  {"top_p", p.top_p},
                  {"frequency_penalty", p.frequency_penalty},
                  {"presence_penalty", p.presence_penalty},
                  {"n", p.n},
                  {"attempt", request.attempt}};
  return j.dump();
}

std::string image_payload(std::string_view image_ref) {
  std::string payload(image_ref);
  if (!is_remote_ref(image_ref) && is_resolvable_image(image_ref)) {
    payload += '\n';
    payload += sha256_hex(read_file(std::string(image_ref)));
  }
  return payload;
}

ChatResponse CachingChatProvider::chat(const ChatRequest& request) {
  const std::string key = cache_key("chat", request.params.model_id, chat_payload(request));
  if (auto hit = cache_->get(key); hit && hit->contains("completions") && (*hit)["completions"].is_array()) {
    ChatResponse r;
    for (const Json& c : (*hit)["completions"]) {
      if (c.is_string()) r.completions.push_back(c.get<std::string>());
    }
    if (r.completions.size() == static_cast<std::size_t>(std::max(1, request.params.n))) {
      r.cached = true;
      return r;
    }
  }
  ChatResponse r = inner_->chat(request);
  cache_->put(key, Json{{"completions", r.completions}});
  return r;
}

Embedding CachingEmbeddingProvider::embed_text(std::string_view text, std::string_view model_id) {
  const std::string key = cache_key("embed_text", model_id, text);
  if (auto hit = cache_->get(key)) {
    if (auto e = embedding_from_json(*hit)) return *e;
  }
  Embedding e = inner_->embed_text(text, model_id);
  cache_->put(key, embedding_to_json(e));
  return e;
}

Embedding CachingEmbeddingProvider::embed_image(std::string_view image_ref, std::string_view model_id) {
  require_resolvable_image(image_ref);
  const std::string key = cache_key("embed_image", model_id, image_payload(image_ref));
  if (auto hit = cache_->get(key)) {
    if (auto e = embedding_from_json(*hit)) return *e;
  }
  Embedding e = inner_->embed_image(image_ref, model_id);
  cache_->put(key, embedding_to_json(e));
  return e;
}

std::string CachingCaptionProvider::describe_image(std::string_view image_ref, std::string_view model_id) {
  require_resolvable_image(image_ref);
  const std::string key = cache_key("describe_image", model_id, image_payload(image_ref));
  if (auto hit = cache_->get(key); hit && hit->contains("description") && (*hit)["description"].is_string()) {
    return (*hit)["description"].get<std::string>();
  }
  std::string d = inner_->describe_image(image_ref, model_id);
  cache_->put(key, Json{{"description", d}});
  return d;
}

}  // namespace brandcap::providers

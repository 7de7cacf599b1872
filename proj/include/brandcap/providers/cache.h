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

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "brandcap/providers/provider.h"

namespace brandcap::providers {

// Bumping this invalidates every stored entry.
inline constexpr std::string_view kCacheVersion = "brandcap-cache-v1";

// Hex SHA-256 over the version stamp, endpoint kind, model and the canonical
// request payload.
std::string cache_key(std::string_view kind, std::string_view model_id, std::string_view payload);
std::string sha256_hex(std::string_view data);

// Content-addressed response store. With a directory, entries live at
// <dir>/v1/<first two hex digits>/<key>.json and are written through a
// temporary file and rename, so concurrent writers of one key are safe
// (values are deterministic per key). Without a directory the store is an
// in-memory map.
class ResponseCache {
 public:
  ResponseCache() = default;
  explicit ResponseCache(std::filesystem::path dir);

  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& value);

  std::filesystem::path path_for(const std::string& key) const;
  bool on_disk() const { return !dir_.empty(); }

 private:
  std::filesystem::path dir_;
  mutable std::mutex mu_;
  std::map<std::string, std::string> memory_;
};

// Canonical payload of a chat request (messages, every sampling parameter
// and the attempt index).
std::string chat_payload(const ChatRequest& request);

class CachingChatProvider final : public ChatProvider {
 public:
  CachingChatProvider(std::shared_ptr<ChatProvider> inner, std::shared_ptr<ResponseCache> cache)
      : inner_(std::move(inner)), cache_(std::move(cache)) {}
  ChatResponse chat(const ChatRequest& request) override;

 private:
  std::shared_ptr<ChatProvider> inner_;
  std::shared_ptr<ResponseCache> cache_;
};

// Local image refs are keyed by path and a digest of the file content, so an
// edited image is re-embedded.
class CachingEmbeddingProvider final : public EmbeddingProvider {
 public:
  CachingEmbeddingProvider(std::shared_ptr<EmbeddingProvider> inner, std::shared_ptr<ResponseCache> cache)
      : inner_(std::move(inner)), cache_(std::move(cache)) {}
  Embedding embed_text(std::string_view text, std::string_view model_id) override;
  Embedding embed_image(std::string_view image_ref, std::string_view model_id) override;

 private:
  std::shared_ptr<EmbeddingProvider> inner_;
  std::shared_ptr<ResponseCache> cache_;
};

class CachingCaptionProvider final : public CaptionProvider {
 public:
  CachingCaptionProvider(std::shared_ptr<CaptionProvider> inner, std::shared_ptr<ResponseCache> cache)
      : inner_(std::move(inner)), cache_(std::move(cache)) {}
  std::string describe_image(std::string_view image_ref, std::string_view model_id) override;

 private:
  std::shared_ptr<CaptionProvider> inner_;
  std::shared_ptr<ResponseCache> cache_;
};

// Cache-key payload for an image ref: the ref plus, for local files, the
// SHA-256 of the file bytes.
std::string image_payload(std::string_view image_ref);

}  // namespace brandcap::providers

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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "brandcap/prompting/prompts.h"

namespace brandcap::providers {

using prompting::ChatMessage;

struct ChatParams {
  std::string model_id;
  double temperature = 0.7;
  double top_p = 0.95;
  double frequency_penalty = 0.0;
  double presence_penalty = 0.0;
  int n = 1;

  friend bool operator==(const ChatParams&, const ChatParams&) = default;
};

struct ChatRequest {
  std::vector<ChatMessage> messages;
  ChatParams params;
  // Regeneration index. Part of the cache key, so a retry after a rejected
  // completion reaches the model instead of replaying the cached answer.
  int attempt = 0;
};

struct ChatResponse {
  // Exactly params.n entries.
  std::vector<std::string> completions;
  bool cached = false;
  std::int64_t latency_ms = 0;
};

struct Embedding {
  std::vector<double> vector;
  std::string model_id;

  std::size_t dim() const { return vector.size(); }
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  // Errors: kProviderUnavailable, kAuthError, kMalformedResponse,
  // kRequestRejected.
  virtual ChatResponse chat(const ChatRequest& request) = 0;
};

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  // Errors: kPreconditionViolation for empty text, plus the chat errors.
  virtual Embedding embed_text(std::string_view text, std::string_view model_id) = 0;
  // Errors: kImageNotFound for refs that are neither an existing file nor an
  // http(s) URL, plus the chat errors.
  virtual Embedding embed_image(std::string_view image_ref, std::string_view model_id) = 0;
};

class CaptionProvider {
 public:
  virtual ~CaptionProvider() = default;
  // One-line plain description of the image. Errors as embed_image.
  virtual std::string describe_image(std::string_view image_ref, std::string_view model_id) = 0;
};

// The model handles one pipeline or evaluation run needs.
struct ProviderSet {
  std::shared_ptr<ChatProvider> chat;
  std::shared_ptr<EmbeddingProvider> embeddings;
  std::shared_ptr<CaptionProvider> captioner;
  std::string chat_model;
  std::string embed_text_model;
  std::string embed_image_model;
  std::string caption_model;
};

// True for "http://host..." or "https://host..." references.
bool is_remote_ref(std::string_view image_ref);
// Remote refs, or local paths naming an existing regular file.
bool is_resolvable_image(std::string_view image_ref);
// Throws Error(kImageNotFound) unless is_resolvable_image(image_ref).
void require_resolvable_image(std::string_view image_ref);

}  // namespace brandcap::providers

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

#include <chrono>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "brandcap/providers/limiter.h"
#include "brandcap/providers/provider.h"

namespace brandcap::providers {

struct RetryPolicy {
  int max_retries = 3;
  std::chrono::milliseconds initial_backoff{500};
  double multiplier = 2.0;

  // Delay before retry number `retry` (0-based); non-decreasing in retry.
  std::chrono::milliseconds delay(int retry) const;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;

struct OpenAiSettings {
  // Scheme, host, optional port and optional path prefix, e.g.
  // "https://api.openai.com/v1" or "http://127.0.0.1:8000/v1".
  std::string base_url;
  std::string api_key;
  RetryPolicy retry;
  std::chrono::seconds timeout{60};
  int max_inflight = 4;
  // Prompt sent alongside the image for describe_image.
  std::string describe_prompt = "Describe this image in one plain sentence.";
};

// Client for OpenAI-compatible chat-completions and embeddings endpoints.
// 429, 5xx and transport failures are retried with exponential backoff;
// 401/403 fail immediately with kAuthError and other 4xx with
// kRequestRejected. When the endpoint rejects n > 1 the completions are
// collected through sequential n = 1 calls. The API key never appears in an
// error message.
class OpenAiClient final : public ChatProvider, public EmbeddingProvider, public CaptionProvider {
 public:
  explicit OpenAiClient(OpenAiSettings settings, Sleeper sleeper = {});
  ~OpenAiClient() override;

  ChatResponse chat(const ChatRequest& request) override;
  Embedding embed_text(std::string_view text, std::string_view model_id) override;
  Embedding embed_image(std::string_view image_ref, std::string_view model_id) override;
  std::string describe_image(std::string_view image_ref, std::string_view model_id) override;

  // HTTP requests sent so far, retries included.
  int request_count() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Replaces every occurrence of secret in text with "***".
std::string redact(std::string text, std::string_view secret);

}  // namespace brandcap::providers

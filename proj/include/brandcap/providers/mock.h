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

#include <atomic>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "brandcap/core/attributes.h"
#include "brandcap/core/error.h"
#include "brandcap/providers/provider.h"

namespace brandcap::providers {

// Suffix appended to every mock generation. Contains no tonality stem.
inline constexpr std::string_view kMockCaptionSuffix = "Made for moments like these.";

// Query description and attributes recovered from a rendered generation
// prompt (chat or instruction family).
struct ParsedGenerationPrompt {
  std::string description;
  AttributeSet attributes;
};
std::optional<ParsedGenerationPrompt> parse_generation_prompt(std::string_view prompt);

// The caption the mock generator writes for a parsed prompt:
// "<description> :sparkles: <entities> <links> <hashtags> <usernames> <suffix>",
// with absent parts skipped.
std::string mock_caption(const ParsedGenerationPrompt& parsed);

// Deterministic offline chat model. Generation prompts are answered with
// mock_caption; judge prompts with "Brand personality: <Name>", chosen from
// trait-word hits in the caption mixed with a seeded hash; anything else
// with "mock completion". Pure function of (seed, request).
class MockChatProvider final : public ChatProvider {
 public:
  explicit MockChatProvider(std::uint64_t seed = 0) : seed_(seed) {}
  ChatResponse chat(const ChatRequest& request) override;

  int call_count() const { return calls_.load(); }

 private:
  std::uint64_t seed_;
  std::atomic<int> calls_{0};
};

// Unit vectors of dimension 16 derived from a seeded hash of the input.
class MockEmbeddingProvider final : public EmbeddingProvider {
 public:
  static constexpr std::size_t kDim = 16;

  explicit MockEmbeddingProvider(std::uint64_t seed = 0) : seed_(seed) {}
  Embedding embed_text(std::string_view text, std::string_view model_id) override;
  Embedding embed_image(std::string_view image_ref, std::string_view model_id) override;

  int call_count() const { return calls_.load(); }

 private:
  Embedding hashed(std::string_view domain, std::string_view input, std::string_view model_id) const;

  std::uint64_t seed_;
  std::atomic<int> calls_{0};
};

// Returns "a photo referenced by <image_ref>".
class MockCaptionProvider final : public CaptionProvider {
 public:
  std::string describe_image(std::string_view image_ref, std::string_view model_id) override;

  int call_count() const { return calls_.load(); }

 private:
  std::atomic<int> calls_{0};
};

// Replays a queued script of responses and failures, one entry per call.
// Thread-safe; an exhausted script fails with kPreconditionViolation.
class ScriptedChatProvider final : public ChatProvider {
 public:
  void push(std::vector<std::string> completions);
  void push_error(ErrorKind kind, std::string message);

  ChatResponse chat(const ChatRequest& request) override;

  int call_count() const;
  std::vector<ChatRequest> requests() const;
  std::size_t remaining() const;

 private:
  struct Step {
    std::vector<std::string> completions;
    std::optional<ErrorKind> error;
    std::string message;
  };

  mutable std::mutex mu_;
  std::deque<Step> script_;
  std::vector<ChatRequest> requests_;
};

}  // namespace brandcap::providers

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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brandcap/core/attributes.h"
#include "brandcap/core/personality.h"
#include "brandcap/core/request.h"

namespace brandcap::prompting {

struct ChatMessage {
  std::string role;
  std::string content;

  friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

enum class PromptKind {
  kInstruction,
  kChatMessages,
  kJudge,
};

struct RenderedPrompt {
  PromptKind kind = PromptKind::kInstruction;
  PromptVariant variant = PromptVariant::kSelective;
  std::string text;
  // Every family is sent as a single user message carrying `text`.
  std::vector<ChatMessage> messages;
};

// An in-context example. Shots come from the training split and share the
// query's personality.
struct ShotExample {
  std::string id;
  std::string description;
  AttributeSet attributes;
  Personality personality = Personality::kSincerity;
  std::string target_caption;

  friend bool operator==(const ShotExample&, const ShotExample&) = default;
};

// The attribute section of one prompt block. Selective: one line per present
// kind, in prompt order, nothing at all when the set is empty. NonSelective:
// every kind on a single line, absent kinds as "None.". Values are joined by
// ", " and terminated with ".".
std::string render_attribute_block(const AttributeSet& attrs, PromptVariant variant);

// Instruction for an instruction-tuned endpoint: header sentence with the
// tone adjective, the description line, then the attribute block.
RenderedPrompt render_instruction(const ValidatedRequest& req);

// Few-shot chat prompt: instruction paragraph, one block per shot, then the
// query block ending in "Instagram caption:". With zero shots the paragraph
// also bans the tonality word.
//
// Errors: kShotCountMismatch when shots.size() != req->shots;
// kPreconditionViolation when a shot's personality differs from the query's
// or its target caption is empty.
RenderedPrompt render_chat_prompt(const ValidatedRequest& req, std::span<const ShotExample> shots);

// Judge prompt with the first occurrence of the caption marker replaced.
// Errors: kPreconditionViolation for a blank caption.
RenderedPrompt render_geval_prompt(std::string_view caption);

inline constexpr std::string_view kCaptionMarker = "##__caption__##";

}  // namespace brandcap::prompting

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

#include "brandcap/providers/mock.h"

#include <array>
#include <cmath>
#include <string>

#include "brandcap/core/personality.h"
#include "brandcap/core/random.h"
#include "brandcap/core/strings.h"

namespace brandcap::providers {
namespace {

constexpr std::string_view kChatQueryMarker = "\nText: ";
constexpr std::string_view kChatTarget = "\nInstagram caption:";
constexpr std::string_view kInstructionHeader = "Create an Instagram caption from the following text.";
constexpr std::string_view kJudgeMarker = "Brand personality (select from";
constexpr std::string_view kJudgeCaption = "Instagram caption: ";

std::string prompt_text(const ChatRequest& request) {
  std::string text;
  for (const ChatMessage& m : request.messages) {
    if (!text.empty()) text += "\n";
    text += m.content;
  }
  return text;
}

// Values of one attribute kind inside an attribute section. The value runs
// from "Label: " to the next label or the end of the section.
std::vector<std::string> parse_values(std::string_view section, AttributeKind kind) {
  const std::string label = std::string(prompt_label(kind)) + ": ";
  std::size_t start = std::string_view::npos;
  for (std::size_t pos = section.find(label); pos != std::string_view::npos;
       pos = section.find(label, pos + 1)) {
    if (pos == 0 || section[pos - 1] == ' ' || section[pos - 1] == '\n') {
      start = pos + label.size();
      break;
    }
  }
  if (start == std::string_view::npos) return {};
  std::size_t end = section.size();
  for (AttributeKind other : kPromptAttributeOrder) {
    if (other == kind) continue;
    const std::string next = std::string(prompt_label(other)) + ": ";
    for (const char* sep : {" ", "\n"}) {
      const std::size_t at = section.find(sep + next, start);
      if (at != std::string_view::npos && at < end) end = at;
    }
  }
  std::string_view value = trim(section.substr(start, end - start));
  if (value.ends_with('.')) value.remove_suffix(1);
  if (value == "None" || value.empty()) return {};
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= value.size()) {
    const std::size_t comma = value.find(", ", pos);
    const std::string_view item = value.substr(pos, comma == std::string_view::npos ? value.npos : comma - pos);
    if (!trim(item).empty()) out.emplace_back(trim(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 2;
  }
  return out;
}

ParsedGenerationPrompt parse_section(std::string_view description, std::string_view section) {
  ParsedGenerationPrompt p;
  p.description = std::string(trim(description));
  for (AttributeKind kind : kPromptAttributeOrder) p.attributes.of(kind) = parse_values(section, kind);
  return p;
}

std::string judge_completion(std::string_view prompt, std::uint64_t seed, int index) {
  const std::size_t marker = prompt.rfind(kJudgeMarker);
  const std::size_t cap = prompt.rfind(kJudgeCaption, marker);
  std::string caption;
  if (cap != std::string_view::npos && marker != std::string_view::npos) {
    caption = std::string(trim(prompt.substr(cap + kJudgeCaption.size(), marker - cap - kJudgeCaption.size())));
  }
  const std::string lower = ascii_lower(caption);
  std::array<int, kPersonalityCount> hits{};
  int best_hits = 0;
  for (Personality p : kAllPersonalities) {
    for (std::string_view w : trait_words(p)) {
      if (lower.find(w) != std::string::npos) ++hits[index_of(p)];
    }
    best_hits = std::max(best_hits, hits[index_of(p)]);
  }
  const std::uint64_t h = splitmix64(seed ^ fnv1a64(caption) ^ splitmix64(static_cast<std::uint64_t>(index) + 1));
  Personality choice = kAllPersonalities[h % kPersonalityCount];
  // A keyword hit steers seven of every ten votes.
  if (best_hits > 0 && (h >> 8) % 10 < 7) {
    for (Personality p : kAllPersonalities) {
      if (hits[index_of(p)] == best_hits) {
        choice = p;
        break;
      }
    }
  }
  return "Brand personality: " + std::string(display_name(choice));
}

}  // namespace

std::optional<ParsedGenerationPrompt> parse_generation_prompt(std::string_view prompt) {
  if (prompt.starts_with(kInstructionHeader)) {
    const std::size_t first = prompt.find('\n');
    if (first == std::string_view::npos) return std::nullopt;
    const std::size_t second = prompt.find('\n', first + 1);
    const std::string_view description =
        prompt.substr(first + 1, second == std::string_view::npos ? prompt.npos : second - first - 1);
    const std::string_view section =
        second == std::string_view::npos ? std::string_view() : prompt.substr(second + 1);
    return parse_section(description, section);
  }
  const std::string_view trimmed = trim(prompt);
  if (!trimmed.ends_with(kChatTarget.substr(1))) return std::nullopt;
  const std::size_t query = prompt.rfind(kChatQueryMarker);
  const std::size_t target = prompt.rfind(kChatTarget);
  if (query == std::string_view::npos || target == std::string_view::npos || target < query) {
    return std::nullopt;
  }
  const std::size_t desc_begin = query + kChatQueryMarker.size();
  const std::size_t desc_end = std::min(prompt.find('\n', desc_begin), target);
  const std::string_view description = prompt.substr(desc_begin, desc_end - desc_begin);
  const std::string_view section =
      desc_end < target ? prompt.substr(desc_end + 1, target - desc_end - 1) : std::string_view();
  return parse_section(description, section);
}

std::string mock_caption(const ParsedGenerationPrompt& parsed) {
  std::string out = parsed.description;
  out += " :sparkles:";
  for (AttributeKind kind : kPromptAttributeOrder) {
    for (const std::string& v : parsed.attributes.of(kind)) {
      out += " ";
      out += v;
    }
  }
  out += " ";
  out += kMockCaptionSuffix;
  return out;
}

ChatResponse MockChatProvider::chat(const ChatRequest& request) {
  ++calls_;
  if (request.messages.empty()) raise(ErrorKind::kPreconditionViolation, "chat needs at least one message");
  const int n = std::max(1, request.params.n);
  const std::string prompt = prompt_text(request);
  ChatResponse response;
  if (prompt.find(kJudgeMarker) != std::string::npos) {
    for (int i = 0; i < n; ++i) response.completions.push_back(judge_completion(prompt, seed_, i));
  } else if (auto parsed = parse_generation_prompt(prompt)) {
    response.completions.assign(static_cast<std::size_t>(n), mock_caption(*parsed));
  } else {
    response.completions.assign(static_cast<std::size_t>(n), "mock completion");
  }
  return response;
}

Embedding MockEmbeddingProvider::hashed(std::string_view domain, std::string_view input,
                                        std::string_view model_id) const {
  std::string key(domain);
  key += '\n';
  key += model_id;
  key += '\n';
  key += input;
  SeededRng rng(splitmix64(seed_ ^ fnv1a64(key)));
  Embedding e;
  e.model_id = std::string(model_id);
  e.vector.resize(kDim);
  double norm = 0.0;
  // Resample the (practically impossible) all-zero draw so the vector is unit.
  while (norm == 0.0) {
    norm = 0.0;
    for (double& v : e.vector) {
      v = rng.uniform_real() * 2.0 - 1.0;
      norm += v * v;
    }
  }
  norm = std::sqrt(norm);
  for (double& v : e.vector) v /= norm;
  return e;
}

Embedding MockEmbeddingProvider::embed_text(std::string_view text, std::string_view model_id) {
  ++calls_;
  if (text.empty()) raise(ErrorKind::kPreconditionViolation, "cannot embed empty text");
  return hashed("text", text, model_id);
}

Embedding MockEmbeddingProvider::embed_image(std::string_view image_ref, std::string_view model_id) {
  ++calls_;
  require_resolvable_image(image_ref);
  return hashed("image", image_ref, model_id);
}

std::string MockCaptionProvider::describe_image(std::string_view image_ref, std::string_view) {
  ++calls_;
  require_resolvable_image(image_ref);
  return "a photo referenced by " + std::string(image_ref);
}

void ScriptedChatProvider::push(std::vector<std::string> completions) {
  std::lock_guard lock(mu_);
  script_.push_back({std::move(completions), std::nullopt, {}});
}

void ScriptedChatProvider::push_error(ErrorKind kind, std::string message) {
  std::lock_guard lock(mu_);
  script_.push_back({{}, kind, std::move(message)});
}

ChatResponse ScriptedChatProvider::chat(const ChatRequest& request) {
  Step step;
  {
    std::lock_guard lock(mu_);
    requests_.push_back(request);
    if (script_.empty()) raise(ErrorKind::kPreconditionViolation, "scripted provider has no responses left");
    step = std::move(script_.front());
    script_.pop_front();
  }
  if (step.error) raise(*step.error, step.message);
  ChatResponse r;
  r.completions = std::move(step.completions);
  return r;
}

int ScriptedChatProvider::call_count() const {
  std::lock_guard lock(mu_);
  return static_cast<int>(requests_.size());
}

std::vector<ChatRequest> ScriptedChatProvider::requests() const {
  std::lock_guard lock(mu_);
  return requests_;
}

std::size_t ScriptedChatProvider::remaining() const {
  std::lock_guard lock(mu_);
  return script_.size();
}

}  // namespace brandcap::providers

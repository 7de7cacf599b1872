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

#include "brandcap/prompting/prompts.h"

#include <string>

#include "brandcap/core/error.h"
#include "brandcap/core/resources.h"
#include "brandcap/core/strings.h"
#include "brandcap/prompting/template.h"

namespace brandcap::prompting {
namespace {

std::string attribute_line(AttributeKind kind, const std::vector<std::string>& values) {
  std::string line(prompt_label(kind));
  line += ": ";
  line += values.empty() ? std::string("None") : join(values, ", ");
  line += ".";
  return line;
}

RenderedPrompt as_user_prompt(PromptKind kind, PromptVariant variant, std::string text) {
  RenderedPrompt p;
  p.kind = kind;
  p.variant = variant;
  p.messages.push_back({"user", text});
  p.text = std::move(text);
  return p;
}

std::string chat_block(std::string_view description, const AttributeSet& attrs,
                       PromptVariant variant, std::string target) {
  return render_template(resources::text("templates/chat_block.txt"),
                         {{"description", std::string(description)},
                          {"attributes", render_attribute_block(attrs, variant)},
                          {"target", std::move(target)}});
}

}  // namespace

std::string render_attribute_block(const AttributeSet& attrs, PromptVariant variant) {
  std::string out;
  const char* sep = variant == PromptVariant::kSelective ? "\n" : " ";
  for (AttributeKind kind : kPromptAttributeOrder) {
    const std::vector<std::string>& values = attrs.of(kind);
    if (variant == PromptVariant::kSelective && values.empty()) continue;
    if (!out.empty()) out += sep;
    out += attribute_line(kind, values);
  }
  return out;
}

RenderedPrompt render_instruction(const ValidatedRequest& req) {
  const CaptionRequest& r = req.get();
  TemplateVars vars = {{"tone", std::string(adjective(r.personality))},
                       {"description", r.description},
                       {"attributes", render_attribute_block(r.attributes, r.variant)}};
  std::string_view tmpl;
  if (r.variant == PromptVariant::kSelective) {
    tmpl = resources::text("templates/instruction_selective.txt");
    std::vector<std::string> kinds;
    for (AttributeKind kind : kPromptAttributeOrder) {
      if (!r.attributes.of(kind).empty()) kinds.emplace_back(prompt_noun(kind));
    }
    vars["usage"] = kinds.empty()
                        ? std::string()
                        : render_template(resources::text("templates/instruction_selective_usage.txt"),
                                          {{"kinds", join(kinds, ", ")}});
  } else {
    tmpl = resources::text("templates/instruction_non_selective.txt");
  }
  return as_user_prompt(PromptKind::kInstruction, r.variant, render_template(tmpl, vars));
}

RenderedPrompt render_chat_prompt(const ValidatedRequest& req, std::span<const ShotExample> shots) {
  const CaptionRequest& r = req.get();
  if (shots.size() != static_cast<std::size_t>(r.shots)) {
    raise(ErrorKind::kShotCountMismatch, "request asks for " + std::to_string(r.shots) +
                                             " shots but " + std::to_string(shots.size()) +
                                             " were supplied");
  }
  std::string blocks;
  for (const ShotExample& shot : shots) {
    if (shot.personality != r.personality) {
      raise(ErrorKind::kPreconditionViolation,
            "shot '" + shot.id + "' has personality " + std::string(display_name(shot.personality)) +
                ", query has " + std::string(display_name(r.personality)));
    }
    if (trim(shot.target_caption).empty()) {
      raise(ErrorKind::kPreconditionViolation, "shot '" + shot.id + "' has an empty target caption");
    }
    blocks += chat_block(shot.description, shot.attributes, r.variant, " " + shot.target_caption);
    blocks += "\n\n";
  }
  blocks += chat_block(r.description, r.attributes, r.variant, "");

  const std::string tone(adjective(r.personality));
  const std::string ban =
      r.shots == 0 ? render_template(resources::text("templates/tonality_ban.txt"), {{"tone", tone}})
                   : std::string();
  const std::string_view tmpl = r.variant == PromptVariant::kSelective
                                    ? resources::text("templates/chat_selective.txt")
                                    : resources::text("templates/chat_non_selective.txt");
  return as_user_prompt(PromptKind::kChatMessages, r.variant,
                        render_template(tmpl, {{"tone", tone}, {"tonality_ban", ban}, {"blocks", blocks}}));
}

RenderedPrompt render_geval_prompt(std::string_view caption) {
  if (trim(caption).empty()) {
    raise(ErrorKind::kPreconditionViolation, "judge prompt needs a non-empty caption");
  }
  std::string text(resources::text("templates/geval.txt"));
  const std::size_t at = text.find(kCaptionMarker);
  if (at != std::string::npos) text.replace(at, kCaptionMarker.size(), caption);
  return as_user_prompt(PromptKind::kJudge, PromptVariant::kSelective, std::move(text));
}

}  // namespace brandcap::prompting

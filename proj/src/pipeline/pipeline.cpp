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

#include "brandcap/pipeline/pipeline.h"

#include <string>

#include "brandcap/core/error.h"
#include "brandcap/core/strings.h"
#include "brandcap/textproc/emoji.h"
#include "brandcap/textproc/rules.h"

namespace brandcap::pipeline {

GeneratedCaption generate_caption(providers::ChatProvider& chat, const ValidatedRequest& req,
                                  const PipelineConfig& cfg, std::span<const prompting::ShotExample> shots) {
  const CaptionRequest& r = req.get();
  if (shots.size() != static_cast<std::size_t>(r.shots)) {
    raise(ErrorKind::kShotCountMismatch, "request asks for " + std::to_string(r.shots) + " shots but " +
                                             std::to_string(shots.size()) + " were supplied");
  }
  prompting::RenderedPrompt prompt;
  if (cfg.instruction_endpoint) {
    if (r.shots != 0) {
      raise(ErrorKind::kPreconditionViolation, "instruction endpoints take no in-context shots");
    }
    prompt = prompting::render_instruction(req);
  } else {
    prompt = prompting::render_chat_prompt(req, shots);
  }

  providers::ChatRequest call;
  call.messages = prompt.messages;
  call.params = cfg.chat;
  call.params.n = 1;
  if (!r.model_id.empty()) call.params.model_id = r.model_id;

  const bool filter = cfg.post_filter_tonality && r.shots == 0;
  const int max_regen = std::max(0, cfg.max_regenerations);

  GeneratedCaption out;
  out.request = r;
  out.primary_caption = r.description;
  for (int attempt = 0;; ++attempt) {
    call.attempt = attempt;
    const providers::ChatResponse response = chat.chat(call);
    out.provider_latency_ms += response.latency_ms;
    out.cached = response.cached;
    if (response.completions.empty() || trim(response.completions[0]).empty()) {
      raise(ErrorKind::kEmptyCompletion, "chat model returned an empty completion");
    }
    out.raw_model_output = response.completions[0];
    out.text = textproc::emojize(out.raw_model_output);
    out.tonality_clean = !textproc::contains_tonality_word(out.text, r.personality);
    out.regenerations = attempt;
    if (!filter || out.tonality_clean || attempt >= max_regen) break;
  }
  return out;
}

GeneratedCaption generate_end_to_end(const providers::ProviderSet& providers, const EndToEndInput& input,
                                     const PipelineConfig& cfg, std::span<const prompting::ShotExample> shots) {
  CaptionRequest r;
  if (input.description && !trim(*input.description).empty()) {
    r.description = std::string(trim(*input.description));
  } else if (input.image_ref && providers::is_resolvable_image(*input.image_ref)) {
    r.description = providers.captioner->describe_image(*input.image_ref, providers.caption_model);
  } else if (input.image_ref) {
    raise(ErrorKind::kPreconditionViolation,
          "image '" + *input.image_ref + "' cannot be resolved and no description was given");
  } else {
    raise(ErrorKind::kPreconditionViolation, "either an image or a description is required");
  }
  r.personality = input.personality;
  r.attributes = input.attributes;
  r.variant = cfg.variant;
  r.shots = cfg.shots;
  r.id = input.id;
  r.model_id = cfg.chat.model_id.empty() ? providers.chat_model : cfg.chat.model_id;
  GeneratedCaption out = generate_caption(*providers.chat, validate_request(r), cfg, shots);
  out.image_ref = input.image_ref;
  return out;
}

}  // namespace brandcap::pipeline

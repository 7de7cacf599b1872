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

#include <optional>
#include <span>
#include <string>

#include "brandcap/core/records.h"
#include "brandcap/core/request.h"
#include "brandcap/prompting/prompts.h"
#include "brandcap/providers/provider.h"

namespace brandcap::pipeline {

struct PipelineConfig {
  // Defaults for requests built by the pipeline itself (end-to-end input);
  // a validated request's own variant and shot count always win.
  PromptVariant variant = PromptVariant::kSelective;
  int shots = 0;
  providers::ChatParams chat;
  // Regenerate zero-shot captions that still contain the tonality word.
  bool post_filter_tonality = true;
  int max_regenerations = 2;
  // Send the fine-tuning instruction instead of the chat prompt, for
  // instruction-tuned text endpoints.
  bool instruction_endpoint = false;
};

// Part 2: renders the prompt, calls the chat model, keeps completion 0 and
// emojizes it. With post filtering on and zero shots, a caption containing
// the tonality word is regenerated up to max_regenerations times (each
// attempt bypasses the response cache); the last attempt is returned and
// tonality_clean records whether it is free of the word.
//
// Errors: kShotCountMismatch (shots.size() != req->shots); kEmptyCompletion;
// kPreconditionViolation for shots in instruction-endpoint mode; provider
// errors propagate.
GeneratedCaption generate_caption(providers::ChatProvider& chat, const ValidatedRequest& req,
                                  const PipelineConfig& cfg, std::span<const prompting::ShotExample> shots);

struct EndToEndInput {
  std::optional<std::string> image_ref;
  // One-line description supplied instead of running the captioner.
  std::optional<std::string> description;
  Personality personality = Personality::kSincerity;
  AttributeSet attributes;
  std::string id;
};

// Part 1 then Part 2. A non-blank description override skips the captioner;
// otherwise the image must be resolvable. The request takes its variant and
// shot count from cfg.
//
// Errors: kPreconditionViolation when neither a description nor a resolvable
// image is given; plus those of describe_image, validate_request and
// generate_caption.
GeneratedCaption generate_end_to_end(const providers::ProviderSet& providers, const EndToEndInput& input,
                                     const PipelineConfig& cfg, std::span<const prompting::ShotExample> shots);

}  // namespace brandcap::pipeline

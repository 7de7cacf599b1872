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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "brandcap/core/records.h"
#include "brandcap/core/request.h"
#include "brandcap/pipeline/pipeline.h"
#include "brandcap/prompting/prompts.h"
#include "brandcap/providers/provider.h"
#include "brandcap/textproc/entities.h"

namespace brandcap::interfaces {

using Json = nlohmann::ordered_json;

// One generation job as accepted by the CLI, the HTTP service and batch
// files. Exactly one of image_ref and description is set.
struct GenerateInput {
  std::string id;
  std::optional<std::string> image_ref;
  std::optional<std::string> description;
  Personality personality = Personality::kSincerity;
  AttributeSet attributes;
  PromptVariant variant = PromptVariant::kSelective;
  int shots = 0;
};

struct FieldError {
  std::string field;
  std::string message;
};

struct ParsedInput {
  GenerateInput input;
  // Empty iff the input is valid.
  std::vector<FieldError> errors;
};

// Schema: {"id"?, "image_ref"? | "description"?, "personality",
// "attributes"? {hashtags, usernames, urls, named_entities}, "variant"?,
// "shots"?}. Missing variant and shots take the given defaults. Values are
// checked with the same rules as validate_request.
ParsedInput parse_generate_input(const Json& body, PromptVariant default_variant = PromptVariant::kSelective,
                                 int default_shots = 0);
Json to_json(const GenerateInput& in);

// Job for scoring a held-out post: attributes come from its caption (grammars
// plus `entities`), the image from the record, else its stored description.
GenerateInput input_from_record(const PostRecord& r, const textproc::EntityExtractor& entities,
                                PromptVariant variant, int shots);

// Shared orchestration behind every front end.
class GenerationService {
 public:
  GenerationService(providers::ProviderSet providers, pipeline::PipelineConfig defaults,
                    std::vector<prompting::ShotExample> shot_pool, std::uint64_t seed);

  // Errors: kPreconditionViolation for an invalid input; kNotEnoughExamples
  // when the pool lacks shots; pipeline and provider errors.
  GeneratedCaption generate(const GenerateInput& in) const;

  // Runs jobs on up to `threads` workers; output order is input order.
  std::vector<GeneratedCaption> generate_batch(std::span<const GenerateInput> inputs, int threads) const;

  const providers::ProviderSet& providers() const { return providers_; }
  const pipeline::PipelineConfig& defaults() const { return defaults_; }

 private:
  providers::ProviderSet providers_;
  pipeline::PipelineConfig defaults_;
  std::vector<prompting::ShotExample> shot_pool_;
  std::uint64_t seed_;
};

}  // namespace brandcap::interfaces

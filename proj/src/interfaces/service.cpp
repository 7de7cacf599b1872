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

#include "brandcap/interfaces/service.h"

#include "brandcap/core/error.h"
#include "brandcap/core/json_codec.h"
#include "brandcap/core/parallel.h"
#include "brandcap/core/strings.h"
#include "brandcap/prompting/shots.h"
#include "brandcap/textproc/extract.h"

namespace brandcap::interfaces {
namespace {

std::string field_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyDescription: return "description";
    case ErrorKind::kMalformedAttribute: return "attributes";
    case ErrorKind::kShotsOutOfRange: return "shots";
    case ErrorKind::kUnknownPersonality: return "personality";
    default: return "body";
  }
}

std::optional<std::string> string_field(const Json& body, const char* name, std::vector<FieldError>& errors) {
  const auto it = body.find(name);
  if (it == body.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    errors.push_back({name, "must be a string"});
    return std::nullopt;
  }
  return it->get<std::string>();
}

}  // namespace

ParsedInput parse_generate_input(const Json& body, PromptVariant default_variant, int default_shots) {
  ParsedInput out;
  auto& errors = out.errors;
  GenerateInput& in = out.input;
  if (!body.is_object()) {
    errors.push_back({"body", "must be a JSON object"});
    return out;
  }
  in.id = string_field(body, "id", errors).value_or("");
  in.image_ref = string_field(body, "image_ref", errors);
  in.description = string_field(body, "description", errors);
  if (in.image_ref && in.description) {
    errors.push_back({"image_ref", "give either an image or a description, not both"});
  } else if (!in.image_ref && !in.description) {
    errors.push_back({"description", "an image or a description is required"});
  } else if (in.image_ref && trim(*in.image_ref).empty()) {
    errors.push_back({"image_ref", "must not be blank"});
  }

  if (auto p = string_field(body, "personality", errors)) {
    if (auto parsed = try_personality_from_string(*p)) {
      in.personality = *parsed;
    } else {
      errors.push_back({"personality", "unknown personality '" + *p + "'"});
    }
  } else if (!body.contains("personality") || body["personality"].is_null()) {
    errors.push_back({"personality", "is required"});
  }

  if (auto it = body.find("attributes"); it != body.end() && !it->is_null()) {
    try {
      in.attributes = json_codec::attributes_from_json(*it);
    } catch (const Error& e) {
      errors.push_back({"attributes", e.what()});
    }
  }

  in.variant = default_variant;
  if (auto v = string_field(body, "variant", errors)) {
    try {
      in.variant = variant_from_string(*v);
    } catch (const Error& e) {
      errors.push_back({"variant", e.what()});
    }
  }
  in.shots = default_shots;
  if (auto it = body.find("shots"); it != body.end() && !it->is_null()) {
    if (it->is_number_integer()) {
      in.shots = it->get<int>();
    } else {
      errors.push_back({"shots", "must be an integer"});
    }
  }

  if (errors.empty()) {
    // Same rules as the pipeline; an image job is checked with a stand-in
    // description since Part 1 has not run yet.
    CaptionRequest probe;
    probe.description = in.description.value_or("image");
    probe.personality = in.personality;
    probe.attributes = in.attributes;
    probe.variant = in.variant;
    probe.shots = in.shots;
    try {
      validate_request(probe);
    } catch (const Error& e) {
      errors.push_back({field_for(e.kind()), e.what()});
    }
  }
  return out;
}

Json to_json(const GenerateInput& in) {
  Json j;
  if (!in.id.empty()) j["id"] = in.id;
  if (in.image_ref) j["image_ref"] = *in.image_ref;
  if (in.description) j["description"] = *in.description;
  j["personality"] = display_name(in.personality);
  j["attributes"] = json_codec::to_json(in.attributes);
  j["variant"] = variant_name(in.variant);
  j["shots"] = in.shots;
  return j;
}

GenerateInput input_from_record(const PostRecord& r, const textproc::EntityExtractor& entities,
                                PromptVariant variant, int shots) {
  GenerateInput in;
  in.id = r.id;
  if (r.image_ref) {
    in.image_ref = r.image_ref;
  } else {
    in.description = r.description.value_or("");
  }
  in.personality = r.personality;
  in.attributes.hashtags = textproc::extract_hashtags(r.caption);
  in.attributes.usernames = textproc::extract_usernames(r.caption);
  in.attributes.urls = textproc::extract_urls(r.caption);
  in.attributes.named_entities = entities.extract(r.caption);
  in.attributes.named_entities = normalize_values(in.attributes.named_entities);
  in.variant = variant;
  in.shots = shots;
  return in;
}

GenerationService::GenerationService(providers::ProviderSet providers, pipeline::PipelineConfig defaults,
                                     std::vector<prompting::ShotExample> shot_pool, std::uint64_t seed)
    : providers_(std::move(providers)),
      defaults_(std::move(defaults)),
      shot_pool_(std::move(shot_pool)),
      seed_(seed) {
  if (defaults_.chat.model_id.empty()) defaults_.chat.model_id = providers_.chat_model;
}

GeneratedCaption GenerationService::generate(const GenerateInput& in) const {
  const ParsedInput check = parse_generate_input(to_json(in), in.variant, in.shots);
  if (!check.errors.empty()) {
    raise(ErrorKind::kPreconditionViolation, check.errors.front().field + ": " + check.errors.front().message);
  }
  pipeline::PipelineConfig cfg = defaults_;
  cfg.variant = in.variant;
  cfg.shots = in.shots;
  const std::vector<prompting::ShotExample> shots =
      prompting::select_shots(shot_pool_, in.personality, in.shots, seed_);
  pipeline::EndToEndInput e2e;
  e2e.image_ref = in.image_ref;
  e2e.description = in.description;
  e2e.personality = in.personality;
  e2e.attributes = in.attributes;
  e2e.id = in.id;
  return pipeline::generate_end_to_end(providers_, e2e, cfg, shots);
}

std::vector<GeneratedCaption> GenerationService::generate_batch(std::span<const GenerateInput> inputs,
                                                                int threads) const {
  std::vector<GeneratedCaption> out(inputs.size());
  parallel_for(inputs.size(), threads, [&](std::size_t i) { out[i] = generate(inputs[i]); });
  return out;
}

}  // namespace brandcap::interfaces

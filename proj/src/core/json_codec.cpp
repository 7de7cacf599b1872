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

#include "brandcap/core/json_codec.h"

#include "brandcap/core/error.h"

namespace brandcap::json_codec {

const Json& require(const Json& j, const char* field) {
  if (!j.is_object()) raise(ErrorKind::kSchemaError, "expected a JSON object");
  auto it = j.find(field);
  if (it == j.end() || it->is_null()) {
    raise(ErrorKind::kSchemaError, std::string("missing field '") + field + "'");
  }
  return *it;
}

std::string require_string(const Json& j, const char* field) {
  const Json& v = require(j, field);
  if (!v.is_string()) {
    raise(ErrorKind::kSchemaError, std::string("field '") + field + "' must be a string");
  }
  return v.get<std::string>();
}

std::optional<std::string> optional_string(const Json& j, const char* field) {
  if (!j.is_object()) raise(ErrorKind::kSchemaError, "expected a JSON object");
  auto it = j.find(field);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    raise(ErrorKind::kSchemaError, std::string("field '") + field + "' must be a string");
  }
  return it->get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const char* field) {
  std::vector<std::string> out;
  auto it = j.find(field);
  if (it == j.end() || it->is_null()) return out;
  if (!it->is_array()) {
    raise(ErrorKind::kSchemaError,
          std::string("field '") + field + "' must be an array of strings");
  }
  for (const Json& v : *it) {
    if (!v.is_string()) {
      raise(ErrorKind::kSchemaError,
            std::string("field '") + field + "' must be an array of strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

Json to_json(const AttributeSet& a) {
  return Json{{"hashtags", a.hashtags},
              {"usernames", a.usernames},
              {"urls", a.urls},
              {"named_entities", a.named_entities}};
}

AttributeSet attributes_from_json(const Json& j) {
  if (j.is_null()) return {};
  if (!j.is_object()) raise(ErrorKind::kSchemaError, "'attributes' must be an object");
  AttributeSet a;
  a.hashtags = string_list(j, "hashtags");
  a.usernames = string_list(j, "usernames");
  a.urls = string_list(j, "urls");
  a.named_entities = string_list(j, "named_entities");
  return a;
}

Json to_json(const CaptionRequest& r) {
  Json j;
  if (!r.id.empty()) j["id"] = r.id;
  j["description"] = r.description;
  j["personality"] = display_name(r.personality);
  j["attributes"] = to_json(r.attributes);
  j["variant"] = variant_name(r.variant);
  j["shots"] = r.shots;
  if (!r.model_id.empty()) j["model_id"] = r.model_id;
  return j;
}

CaptionRequest request_from_json(const Json& j) {
  CaptionRequest r;
  r.id = optional_string(j, "id").value_or("");
  r.description = require_string(j, "description");
  r.personality = personality_from_string(require_string(j, "personality"));
  if (auto it = j.find("attributes"); it != j.end()) r.attributes = attributes_from_json(*it);
  if (auto v = optional_string(j, "variant")) r.variant = variant_from_string(*v);
  if (auto it = j.find("shots"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer()) raise(ErrorKind::kSchemaError, "'shots' must be an integer");
    r.shots = it->get<int>();
  }
  r.model_id = optional_string(j, "model_id").value_or("");
  return r;
}

Json to_json(const PostRecord& r) {
  Json j;
  j["id"] = r.id;
  j["brand"] = r.brand;
  j["personality"] = display_name(r.personality);
  j["image_ref"] = r.image_ref ? Json(*r.image_ref) : Json(nullptr);
  j["caption"] = r.caption;
  j["collected_at"] = r.collected_at.to_string();
  if (r.description) j["description"] = *r.description;
  return j;
}

PostRecord post_record_from_json(const Json& j, const BrandMap& brands) {
  PostRecord r;
  r.id = require_string(j, "id");
  r.brand = require_string(j, "brand");
  r.personality = brands.at(r.brand).personality;
  if (auto p = optional_string(j, "personality")) {
    if (personality_from_string(*p) != r.personality) {
      raise(ErrorKind::kSchemaError,
            "personality '" + *p + "' disagrees with the brand map for '" + r.brand + "'");
    }
  }
  r.image_ref = optional_string(j, "image_ref");
  r.caption = require_string(j, "caption");
  r.collected_at = Date::parse(require_string(j, "collected_at"));
  r.description = optional_string(j, "description");
  return r;
}

Json to_json(const GeneratedCaption& g) {
  Json j;
  if (!g.request.id.empty()) j["id"] = g.request.id;
  j["caption"] = g.text;
  j["primary_caption"] = g.primary_caption;
  j["image_ref"] = g.image_ref ? Json(*g.image_ref) : Json(nullptr);
  j["raw_model_output"] = g.raw_model_output;
  j["provider_latency_ms"] = g.provider_latency_ms;
  j["flags"] = Json{{"tonality_clean", g.tonality_clean},
                    {"cached", g.cached},
                    {"regenerations", g.regenerations}};
  j["request"] = to_json(g.request);
  return j;
}

GeneratedCaption generated_caption_from_json(const Json& j) {
  GeneratedCaption g;
  g.text = require_string(j, "caption");
  g.request = request_from_json(require(j, "request"));
  g.primary_caption = optional_string(j, "primary_caption").value_or(g.request.description);
  g.image_ref = optional_string(j, "image_ref");
  g.raw_model_output = optional_string(j, "raw_model_output").value_or(g.text);
  if (auto it = j.find("provider_latency_ms"); it != j.end() && it->is_number_integer()) {
    g.provider_latency_ms = it->get<std::int64_t>();
  }
  if (auto it = j.find("flags"); it != j.end() && it->is_object()) {
    g.tonality_clean = it->value("tonality_clean", true);
    g.cached = it->value("cached", false);
    g.regenerations = it->value("regenerations", 0);
  }
  return g;
}

}  // namespace brandcap::json_codec

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

#include <json.hpp>

#include "brandcap/core/attributes.h"
#include "brandcap/core/brand_map.h"
#include "brandcap/core/records.h"
#include "brandcap/core/request.h"

// JSON (de)serialization for the core domain types. Parse failures raise
// Error(kSchemaError) naming the offending field.
namespace brandcap::json_codec {

using Json = nlohmann::ordered_json;

Json to_json(const AttributeSet& a);
AttributeSet attributes_from_json(const Json& j);

Json to_json(const CaptionRequest& r);
CaptionRequest request_from_json(const Json& j);

// The personality is derived from the brand map; a "personality" field, when
// present, must agree with it.
Json to_json(const PostRecord& r);
PostRecord post_record_from_json(const Json& j, const BrandMap& brands);

Json to_json(const GeneratedCaption& g);
GeneratedCaption generated_caption_from_json(const Json& j);

// Field helpers shared by the other codecs.
const Json& require(const Json& j, const char* field);
std::string require_string(const Json& j, const char* field);
std::optional<std::string> optional_string(const Json& j, const char* field);
std::vector<std::string> string_list(const Json& j, const char* field);

}  // namespace brandcap::json_codec

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

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "brandcap/core/brand_map.h"
#include "brandcap/core/records.h"
#include "brandcap/dataset/dataset.h"
#include "brandcap/prompting/prompts.h"

namespace brandcap::dataset {

using Json = nlohmann::ordered_json;

// Whole file as a string. Errors: kInputNotFound.
std::string read_text_file(const std::filesystem::path& path);
// Creates parent directories. Errors: kIoError.
void write_text_file(const std::filesystem::path& path, std::string_view content);

// Calls fn(json, line_number) for every non-blank line. Parse failures and
// schema errors thrown by fn are re-raised as kSchemaError prefixed with
// "line N".
void for_each_jsonl(std::string_view text, const std::function<void(const Json&, int)>& fn);

std::vector<PostRecord> parse_post_records(std::string_view jsonl, const BrandMap& brands);
std::string post_records_to_jsonl(std::span<const PostRecord> records);

Json to_json(const TrainingPair& p);
Json to_json(const prompting::ShotExample& s);
prompting::ShotExample shot_from_json(const Json& j);
std::vector<prompting::ShotExample> parse_shots(std::string_view jsonl);

// One object of the common post export shape {shortcode, caption,
// display_url, taken_at, owner_username}. taken_at may be unix seconds or a
// string starting with YYYY-MM-DD. The brand is `brand` when non-empty,
// else owner_username; it must be in the brand map.
// Errors: kSchemaError; kUnknownBrand.
PostRecord import_export_record(const Json& j, const BrandMap& brands, std::string_view brand = {});

}  // namespace brandcap::dataset

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

#include "brandcap/dataset/io.h"

#include <fstream>
#include <sstream>

#include "brandcap/core/error.h"
#include "brandcap/core/json_codec.h"
#include "brandcap/core/strings.h"

namespace brandcap::dataset {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::kInputNotFound, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorKind::kIoError, "cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) raise(ErrorKind::kIoError, "short write to '" + path.string() + "'");
}

void for_each_jsonl(std::string_view text, const std::function<void(const Json&, int)>& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      raise(ErrorKind::kSchemaError, "line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
    }
    try {
      fn(j, line_no);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kSchemaError && e.kind() != ErrorKind::kUnknownBrand &&
          e.kind() != ErrorKind::kUnknownPersonality) {
        throw;
      }
      // Drop the kind prefix raise() already added; it is added again below.
      std::string_view what = e.what();
      const std::string prefix = std::string(error_kind_name(e.kind())) + ": ";
      if (what.starts_with(prefix)) what.remove_prefix(prefix.size());
      raise(e.kind(), "line " + std::to_string(line_no) + ": " + std::string(what));
    } catch (const nlohmann::json::exception& e) {
      raise(ErrorKind::kSchemaError, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

std::vector<PostRecord> parse_post_records(std::string_view jsonl, const BrandMap& brands) {
  std::vector<PostRecord> out;
  for_each_jsonl(jsonl, [&](const Json& j, int) { out.push_back(json_codec::post_record_from_json(j, brands)); });
  return out;
}

std::string post_records_to_jsonl(std::span<const PostRecord> records) {
  std::string out;
  for (const PostRecord& r : records) out += json_codec::to_json(r).dump() + "\n";
  return out;
}

Json to_json(const TrainingPair& p) {
  Json j;
  j["id"] = p.id;
  j["personality"] = display_name(p.personality);
  j["variant"] = variant_name(p.variant);
  j["instruction"] = p.instruction;
  j["target"] = p.target;
  j["description"] = p.description;
  j["attributes"] = json_codec::to_json(p.attributes);
  return j;
}

Json to_json(const prompting::ShotExample& s) {
  Json j;
  j["id"] = s.id;
  j["personality"] = display_name(s.personality);
  j["description"] = s.description;
  j["attributes"] = json_codec::to_json(s.attributes);
  j["target_caption"] = s.target_caption;
  return j;
}

prompting::ShotExample shot_from_json(const Json& j) {
  prompting::ShotExample s;
  s.id = json_codec::require_string(j, "id");
  s.personality = personality_from_string(json_codec::require_string(j, "personality"));
  s.description = json_codec::require_string(j, "description");
  if (auto it = j.find("attributes"); it != j.end()) s.attributes = json_codec::attributes_from_json(*it);
  // Training-pair lines carry the caption as "target".
  if (auto t = json_codec::optional_string(j, "target_caption")) {
    s.target_caption = *t;
  } else {
    s.target_caption = json_codec::require_string(j, "target");
  }
  return s;
}

std::vector<prompting::ShotExample> parse_shots(std::string_view jsonl) {
  std::vector<prompting::ShotExample> out;
  for_each_jsonl(jsonl, [&](const Json& j, int) { out.push_back(shot_from_json(j)); });
  return out;
}

PostRecord import_export_record(const Json& j, const BrandMap& brands, std::string_view brand) {
  if (!j.is_object()) raise(ErrorKind::kSchemaError, "export record is not an object");
  PostRecord r;
  r.id = json_codec::require_string(j, "shortcode");
  r.caption = json_codec::optional_string(j, "caption").value_or("");
  r.image_ref = json_codec::optional_string(j, "display_url");
  const std::string owner = json_codec::optional_string(j, "owner_username").value_or("");
  r.brand = brand.empty() ? owner : std::string(brand);
  const BrandEntry& entry = brands.at(r.brand);
  r.brand = entry.name;
  r.personality = entry.personality;
  const Json& taken = json_codec::require(j, "taken_at");
  if (taken.is_number_integer()) {
    r.collected_at = Date::from_unix_seconds(taken.get<std::int64_t>());
  } else if (taken.is_string() && taken.get<std::string>().size() >= 10) {
    r.collected_at = Date::parse(taken.get<std::string>().substr(0, 10));
  } else {
    raise(ErrorKind::kSchemaError, "field 'taken_at' must be unix seconds or a YYYY-MM-DD string");
  }
  return r;
}

}  // namespace brandcap::dataset

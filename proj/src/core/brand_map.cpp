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

#include "brandcap/core/brand_map.h"

#include "brandcap/core/error.h"
#include "brandcap/core/resources.h"
#include "brandcap/core/strings.h"

namespace brandcap {

const BrandMap& BrandMap::bundled() {
  static const BrandMap kMap = parse(resources::get("brand_map.tsv"));
  return kMap;
}

BrandMap BrandMap::parse(std::string_view tsv) {
  BrandMap map;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < tsv.size()) {
    std::size_t end = tsv.find('\n', pos);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view line = tsv.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || line.front() == '#') continue;

    const auto fail = [&](const std::string& why) {
      raise(ErrorKind::kSchemaError, "brand map line " + std::to_string(line_no) + ": " + why);
    };
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) fail("expected three tab-separated fields");
    const std::string_view name = trim(line.substr(0, t1));
    const auto personality = try_personality_from_string(line.substr(t1 + 1, t2 - t1 - 1));
    const std::string split = ascii_lower(trim(line.substr(t2 + 1)));
    if (name.empty()) fail("empty brand name");
    if (!personality) fail("unknown personality");
    if (split != "train" && split != "test") fail("split must be 'train' or 'test'");
    if (map.find(name)) fail("duplicate brand '" + std::string(name) + "'");
    map.entries_.push_back(BrandEntry{std::string(name), *personality, split == "test"});
  }
  return map;
}

std::optional<BrandEntry> BrandMap::find(std::string_view brand) const {
  const std::string_view needle = trim(brand);
  for (const BrandEntry& e : entries_) {
    if (iequals(e.name, needle)) return e;
  }
  return std::nullopt;
}

const BrandEntry& BrandMap::at(std::string_view brand) const {
  const std::string_view needle = trim(brand);
  for (const BrandEntry& e : entries_) {
    if (iequals(e.name, needle)) return e;
  }
  raise(ErrorKind::kUnknownBrand, "brand '" + std::string(brand) + "' is not in the brand map");
}

}  // namespace brandcap

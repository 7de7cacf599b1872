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
#include <string>
#include <string_view>
#include <vector>

#include "brandcap/core/personality.h"

namespace brandcap {

struct BrandEntry {
  std::string name;
  Personality personality;
  bool held_out_for_test = false;
};

// Brand -> personality assignment with the held-out test brands.
// File format: one line per brand, "name<TAB>Personality<TAB>train|test".
class BrandMap {
 public:
  // The bundled map: six brands per personality, one of them held out.
  static const BrandMap& bundled();
  // Throws Error(kSchemaError) with the offending line number.
  static BrandMap parse(std::string_view tsv);

  // Case-insensitive exact name lookup.
  std::optional<BrandEntry> find(std::string_view brand) const;
  // Throws Error(kUnknownBrand).
  const BrandEntry& at(std::string_view brand) const;

  const std::vector<BrandEntry>& entries() const { return entries_; }

 private:
  std::vector<BrandEntry> entries_;
};

}  // namespace brandcap

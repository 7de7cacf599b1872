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

#include <string>
#include <string_view>
#include <vector>

namespace brandcap::textproc {

// Source of named entities for training-instruction construction. The offline
// default is the capitalized-phrase heuristic; an NER service can be plugged
// in behind the same interface.
class EntityExtractor {
 public:
  virtual ~EntityExtractor() = default;
  virtual std::vector<std::string> extract(std::string_view text) const = 0;
};

class HeuristicEntityExtractor final : public EntityExtractor {
 public:
  std::vector<std::string> extract(std::string_view text) const override;
};

}  // namespace brandcap::textproc

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

#include "brandcap/core/personality.h"

#include <string>

#include "brandcap/core/error.h"
#include "brandcap/core/strings.h"

namespace brandcap {
namespace {

struct PersonalityInfo {
  std::string_view noun;
  std::string_view adjective;
  std::span<const std::string_view> traits;
  std::span<const std::string_view> stems;
};

constexpr std::string_view kSincerityTraits[] = {"down-to-earth", "honest", "wholesome",
                                                 "cheerful"};
constexpr std::string_view kExcitementTraits[] = {"daring", "spirited", "imaginative",
                                                  "up-to-date"};
constexpr std::string_view kCompetenceTraits[] = {"reliable", "intelligent", "successful"};
constexpr std::string_view kSophisticationTraits[] = {"upper class", "charming"};
constexpr std::string_view kRuggednessTraits[] = {"outdoorsy", "tough"};

constexpr std::string_view kSincerityStems[] = {"sincer"};
constexpr std::string_view kExcitementStems[] = {"excit"};
constexpr std::string_view kCompetenceStems[] = {"competen"};
constexpr std::string_view kSophisticationStems[] = {"sophistic"};
constexpr std::string_view kRuggednessStems[] = {"rugged"};

const PersonalityInfo& info(Personality p) {
  static const PersonalityInfo kInfo[kPersonalityCount] = {
      {"Sincerity", "sincere", kSincerityTraits, kSincerityStems},
      {"Excitement", "exciting", kExcitementTraits, kExcitementStems},
      {"Competence", "competent", kCompetenceTraits, kCompetenceStems},
      {"Sophistication", "sophisticated", kSophisticationTraits, kSophisticationStems},
      {"Ruggedness", "rugged", kRuggednessTraits, kRuggednessStems},
  };
  return kInfo[index_of(p)];
}

}  // namespace

std::string_view display_name(Personality p) { return info(p).noun; }
std::string_view adjective(Personality p) { return info(p).adjective; }
std::span<const std::string_view> trait_words(Personality p) { return info(p).traits; }
std::span<const std::string_view> tonality_stems(Personality p) { return info(p).stems; }

std::optional<Personality> try_personality_from_string(std::string_view s) {
  const std::string needle = ascii_lower(trim(s));
  for (Personality p : kAllPersonalities) {
    if (needle == ascii_lower(display_name(p))) return p;
  }
  return std::nullopt;
}

Personality personality_from_string(std::string_view s) {
  if (auto p = try_personality_from_string(s)) return *p;
  raise(ErrorKind::kUnknownPersonality, "'" + std::string(s) + "' is not one of Sincerity, "
                                        "Excitement, Competence, Sophistication, Ruggedness");
}

}  // namespace brandcap

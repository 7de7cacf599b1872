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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace brandcap {

// The five brand personality dimensions. The numeric values are the fixed
// confusion-matrix indices used throughout the metrics module.
enum class Personality : std::uint8_t {
  kSincerity = 0,
  kExcitement = 1,
  kCompetence = 2,
  kSophistication = 3,
  kRuggedness = 4,
};

inline constexpr std::size_t kPersonalityCount = 5;

inline constexpr std::array<Personality, kPersonalityCount> kAllPersonalities = {
    Personality::kSincerity, Personality::kExcitement, Personality::kCompetence,
    Personality::kSophistication, Personality::kRuggedness};

constexpr std::size_t index_of(Personality p) { return static_cast<std::size_t>(p); }

// Canonical noun form, e.g. "Sincerity". Round-trips through
// personality_from_string.
std::string_view display_name(Personality p);

// Lowercase adjective used as the tone word in prompts, e.g. "sincere".
std::string_view adjective(Personality p);

// Lowercase trait words for the dimension.
std::span<const std::string_view> trait_words(Personality p);

// Lowercase prefix stems that identify the tonality word and its variants.
std::span<const std::string_view> tonality_stems(Personality p);

// Case-insensitive match on the five noun forms; surrounding whitespace is
// ignored. Throws Error(kUnknownPersonality) for anything else.
Personality personality_from_string(std::string_view s);
std::optional<Personality> try_personality_from_string(std::string_view s);

}  // namespace brandcap

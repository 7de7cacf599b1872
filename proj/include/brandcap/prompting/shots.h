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

#include <cstdint>
#include <span>
#include <vector>

#include "brandcap/core/personality.h"
#include "brandcap/prompting/prompts.h"

namespace brandcap::prompting {

// Picks k examples of personality p from the training pool. Candidates with
// more attribute kinds present rank first; ties are ordered by a seeded hash
// of the example id, then by id. Deterministic per (pool, p, k, seed).
//
// Errors: kShotsOutOfRange unless 0 <= k <= kMaxShots; kNotEnoughExamples
// when fewer than k candidates have personality p and a non-empty target.
std::vector<ShotExample> select_shots(std::span<const ShotExample> train, Personality p, int k,
                                      std::uint64_t seed);

}  // namespace brandcap::prompting

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

#include "brandcap/prompting/shots.h"

#include <algorithm>
#include <string>

#include "brandcap/core/error.h"
#include "brandcap/core/random.h"
#include "brandcap/core/request.h"
#include "brandcap/core/strings.h"

namespace brandcap::prompting {

std::vector<ShotExample> select_shots(std::span<const ShotExample> train, Personality p, int k,
                                      std::uint64_t seed) {
  if (k < 0 || k > kMaxShots) {
    raise(ErrorKind::kShotsOutOfRange, "shot count " + std::to_string(k) + " is outside 0..4");
  }
  if (k == 0) return {};

  struct Candidate {
    int score;
    std::uint64_t tie;
    const ShotExample* shot;
  };
  std::vector<Candidate> candidates;
  for (const ShotExample& s : train) {
    if (s.personality != p || trim(s.target_caption).empty()) continue;
    candidates.push_back({s.attributes.kinds_present(), splitmix64(seed ^ fnv1a64(s.id)), &s});
  }
  if (candidates.size() < static_cast<std::size_t>(k)) {
    raise(ErrorKind::kNotEnoughExamples,
          "need " + std::to_string(k) + " " + std::string(display_name(p)) + " examples, pool has " +
              std::to_string(candidates.size()));
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.tie != b.tie) return a.tie < b.tie;
    return a.shot->id < b.shot->id;
  });
  std::vector<ShotExample> out;
  for (int i = 0; i < k; ++i) out.push_back(*candidates[static_cast<std::size_t>(i)].shot);
  return out;
}

}  // namespace brandcap::prompting

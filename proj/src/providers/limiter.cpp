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

#include "brandcap/providers/limiter.h"

#include <algorithm>

namespace brandcap::providers {

InflightLimiter::InflightLimiter(int max_inflight)
    : capacity_(std::clamp(max_inflight, 1, kMaxPermits)), slots_(capacity_) {}

InflightLimiter::Permit InflightLimiter::acquire() {
  slots_.acquire();
  return Permit(this);
}

std::optional<InflightLimiter::Permit> InflightLimiter::try_acquire() {
  if (!slots_.try_acquire()) return std::nullopt;
  return std::optional<Permit>(std::in_place, this);
}

}  // namespace brandcap::providers

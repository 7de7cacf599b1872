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
#include <string>

#include "brandcap/providers/openai.h"
#include "brandcap/providers/provider.h"

namespace brandcap::providers {

struct ProviderSettings {
  // Empty selects the offline mock stack.
  std::string base_url;
  std::string api_key;
  std::string chat_model = "gpt-3.5-turbo";
  std::string embed_text_model = "all-mpnet-base-v2";
  std::string embed_image_model = "clip-vit-base-patch32";
  std::string caption_model = "blip2-flan-t5-xxl";
  // Empty disables the response cache.
  std::string cache_dir;
  int max_inflight = 4;
  std::uint64_t seed = 0;
  RetryPolicy retry;
};

// Builds the live client (or the mocks) and wraps it with the disk cache
// when cache_dir is set.
ProviderSet make_provider_set(const ProviderSettings& settings, Sleeper sleeper = {});

}  // namespace brandcap::providers

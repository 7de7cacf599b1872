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

#include "brandcap/providers/factory.h"

#include <memory>

#include "brandcap/providers/cache.h"
#include "brandcap/providers/mock.h"

namespace brandcap::providers {

ProviderSet make_provider_set(const ProviderSettings& settings, Sleeper sleeper) {
  ProviderSet set;
  set.chat_model = settings.chat_model;
  set.embed_text_model = settings.embed_text_model;
  set.embed_image_model = settings.embed_image_model;
  set.caption_model = settings.caption_model;
  if (settings.base_url.empty()) {
    set.chat = std::make_shared<MockChatProvider>(settings.seed);
    set.embeddings = std::make_shared<MockEmbeddingProvider>(settings.seed);
    set.captioner = std::make_shared<MockCaptionProvider>();
  } else {
    OpenAiSettings o;
    o.base_url = settings.base_url;
    o.api_key = settings.api_key;
    o.retry = settings.retry;
    o.max_inflight = settings.max_inflight;
    auto client = std::make_shared<OpenAiClient>(std::move(o), std::move(sleeper));
    set.chat = client;
    set.embeddings = client;
    set.captioner = client;
  }
  if (!settings.cache_dir.empty()) {
    auto cache = std::make_shared<ResponseCache>(settings.cache_dir);
    set.chat = std::make_shared<CachingChatProvider>(set.chat, cache);
    set.embeddings = std::make_shared<CachingEmbeddingProvider>(set.embeddings, cache);
    set.captioner = std::make_shared<CachingCaptionProvider>(set.captioner, cache);
  }
  return set;
}

}  // namespace brandcap::providers

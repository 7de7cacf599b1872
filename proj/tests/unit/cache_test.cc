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

#include "brandcap/providers/cache.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "brandcap/core/parallel.h"
#include "brandcap/providers/factory.h"
#include "brandcap/providers/limiter.h"
#include "brandcap/providers/mock.h"
#include "fake_openai_server.h"

namespace brandcap::providers {
namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("brandcap_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

ChatRequest request(const std::string& text, int attempt = 0) {
  ChatRequest r;
  r.messages = {{"user", text}};
  r.params.model_id = "m";
  r.attempt = attempt;
  return r;
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(CacheKey, StableAndSensitiveToEveryPart) {
  const std::string k = cache_key("chat", "m", "payload");
  EXPECT_EQ(k, cache_key("chat", "m", "payload"));
  EXPECT_EQ(k.size(), 64u);
  EXPECT_NE(k, cache_key("embed_text", "m", "payload"));
  EXPECT_NE(k, cache_key("chat", "m2", "payload"));
  EXPECT_NE(k, cache_key("chat", "m", "payload2"));
  ChatRequest a = request("x");
  ChatRequest b = a;
  b.params.temperature = 0.2;
  EXPECT_NE(chat_payload(a), chat_payload(b));
  b = a;
  b.attempt = 1;
  EXPECT_NE(chat_payload(a), chat_payload(b));
}

TEST(CachingChat, SecondCallIsCachedWithoutInnerCall) {
  auto inner = std::make_shared<MockChatProvider>(1);
  CachingChatProvider cached(inner, std::make_shared<ResponseCache>());
  const ChatResponse first = cached.chat(request("hello"));
  const ChatResponse second = cached.chat(request("hello"));
  EXPECT_FALSE(first.cached);
  EXPECT_TRUE(second.cached);
  EXPECT_EQ(first.completions, second.completions);
  EXPECT_EQ(inner->call_count(), 1);
  cached.chat(request("hello", 1));
  EXPECT_EQ(inner->call_count(), 2);
}

TEST(CachingChat, DiskLayoutAndNoSecretsOnDisk) {
  const fs::path dir = fresh_dir("cache_layout");
  testing::FakeOpenAiServer server;
  ProviderSettings s;
  s.base_url = server.base_url();
  s.api_key = "sk-never-on-disk";
  s.cache_dir = dir.string();
  const ProviderSet set = make_provider_set(s);
  const ChatResponse a = set.chat->chat(request("hello"));
  const ChatResponse b = set.chat->chat(request("hello"));
  EXPECT_EQ(server.hits(), 1);
  EXPECT_TRUE(b.cached);
  EXPECT_EQ(a.completions, b.completions);
  set.embeddings->embed_text("t", "e");
  set.embeddings->embed_text("t", "e");
  EXPECT_EQ(server.hits(), 2);

  int files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    ++files;
    const fs::path rel = fs::relative(entry.path(), dir);
    auto it = rel.begin();
    EXPECT_EQ(*it++, "v1");
    const std::string shard = (*it++).string();
    const std::string file = (*it).string();
    EXPECT_EQ(shard.size(), 2u);
    EXPECT_TRUE(file.starts_with(shard));
    EXPECT_TRUE(file.ends_with(".json"));
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str().find("sk-never-on-disk"), std::string::npos);
  }
  EXPECT_EQ(files, 2);
  fs::remove_all(dir);
}

TEST(CachingChat, CorruptEntryIsAMiss) {
  const fs::path dir = fresh_dir("cache_corrupt");
  auto cache = std::make_shared<ResponseCache>(dir);
  auto inner = std::make_shared<MockChatProvider>();
  CachingChatProvider cached(inner, cache);
  cached.chat(request("hi"));
  const std::string key = cache_key("chat", "m", chat_payload(request("hi")));
  std::ofstream(cache->path_for(key), std::ios::trunc) << "{torn";
  EXPECT_FALSE(cached.chat(request("hi")).cached);
  EXPECT_TRUE(cached.chat(request("hi")).cached);
  fs::remove_all(dir);
}

TEST(CachingChat, ConcurrentWritersAgree) {
  const fs::path dir = fresh_dir("cache_concurrent");
  auto inner = std::make_shared<MockChatProvider>(2);
  CachingChatProvider cached(inner, std::make_shared<ResponseCache>(dir));
  std::vector<std::vector<std::string>> results(64);
  parallel_for(results.size(), 8, [&](std::size_t i) { results[i] = cached.chat(request("k" + std::to_string(i % 4))).completions; });
  for (std::size_t i = 0; i < results.size(); ++i) EXPECT_EQ(results[i], results[i % 4]);
  fs::remove_all(dir);
}

TEST(CachingEmbeddings, ImageKeyTracksFileContent) {
  const fs::path dir = fresh_dir("cache_image");
  fs::create_directories(dir);
  const fs::path img = dir / "img.jpg";
  std::ofstream(img) << "one";
  auto inner = std::make_shared<MockEmbeddingProvider>();
  CachingEmbeddingProvider cached(inner, std::make_shared<ResponseCache>());
  const Embedding a = cached.embed_image(img.string(), "clip");
  cached.embed_image(img.string(), "clip");
  EXPECT_EQ(inner->call_count(), 1);
  std::ofstream(img, std::ios::trunc) << "two";
  cached.embed_image(img.string(), "clip");
  EXPECT_EQ(inner->call_count(), 2);
  EXPECT_EQ(cached.embed_text("x", "e"), cached.embed_text("x", "e"));
  EXPECT_EQ(inner->call_count(), 3);
  fs::remove_all(dir);
}

TEST(InflightLimiter, BoundsConcurrency) {
  InflightLimiter limiter(3);
  std::atomic<int> active{0};
  std::atomic<int> peak{0};
  parallel_for(40, 10, [&](std::size_t) {
    auto permit = limiter.acquire();
    const int now = ++active;
    int prev = peak.load();
    while (now > prev && !peak.compare_exchange_weak(prev, now)) {
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
    --active;
  });
  EXPECT_LE(peak.load(), 3);
  EXPECT_GE(peak.load(), 1);
}

TEST(InflightLimiter, TryAcquireFailsWhenSaturated) {
  InflightLimiter limiter(1);
  auto held = limiter.try_acquire();
  ASSERT_TRUE(held.has_value());
  EXPECT_FALSE(limiter.try_acquire().has_value());
  held.reset();
  EXPECT_TRUE(limiter.try_acquire().has_value());
  EXPECT_EQ(InflightLimiter(0).capacity(), 1);
}

TEST(ProviderFactory, NoBaseUrlMeansMocks) {
  const ProviderSet set = make_provider_set({});
  EXPECT_NE(dynamic_cast<MockChatProvider*>(set.chat.get()), nullptr);
  EXPECT_NE(dynamic_cast<MockEmbeddingProvider*>(set.embeddings.get()), nullptr);
  EXPECT_EQ(set.chat_model, "gpt-3.5-turbo");
}

}  // namespace
}  // namespace brandcap::providers

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

#include "brandcap/providers/mock.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "brandcap/core/error.h"
#include "brandcap/prompting/prompts.h"
#include "brandcap/textproc/emoji.h"
#include "brandcap/textproc/presence.h"

namespace brandcap::providers {
namespace {

ChatRequest user(const std::string& text, int n = 1) {
  ChatRequest r;
  r.messages = {{"user", text}};
  r.params.n = n;
  return r;
}

CaptionRequest bed_request(PromptVariant v) {
  CaptionRequest r;
  r.description = "a bed with a green comforter and a wooden headboard";
  r.personality = Personality::kSophistication;
  r.attributes.named_entities = {"this season"};
  r.attributes.hashtags = {"#homeinspo", "#potterybarn"};
  r.attributes.usernames = {"@brooklynmarriott"};
  r.attributes.urls = {"https://pb.example/beds"};
  r.variant = v;
  return r;
}

TEST(MockChat, EchoesDescriptionAndAttributesFromChatPrompts) {
  MockChatProvider mock(1);
  for (PromptVariant v : {PromptVariant::kSelective, PromptVariant::kNonSelective}) {
    const CaptionRequest req = bed_request(v);
    const auto prompt = prompting::render_chat_prompt(validate_request(req), {});
    const ChatResponse r = mock.chat(user(prompt.text));
    ASSERT_EQ(r.completions.size(), 1u);
    EXPECT_EQ(r.completions[0],
              "a bed with a green comforter and a wooden headboard :sparkles: this season https://pb.example/beds "
              "#homeinspo #potterybarn @brooklynmarriott Made for moments like these.");
    EXPECT_TRUE(textproc::attribute_presence(textproc::emojize(r.completions[0]), req.attributes).all_present);
  }
}

TEST(MockChat, ParsesInstructionPromptsToo) {
  MockChatProvider mock;
  const CaptionRequest req = bed_request(PromptVariant::kNonSelective);
  const auto prompt = prompting::render_instruction(validate_request(req));
  const auto parsed = parse_generation_prompt(prompt.text);
  ASSERT_TRUE(parsed.has_value());
  EXPECT_EQ(parsed->description, req.description);
  EXPECT_EQ(parsed->attributes, req.attributes);
}

TEST(MockChat, ParsesFewShotQueryBlockOnly) {
  CaptionRequest req = bed_request(PromptVariant::kSelective);
  req.shots = 1;
  const prompting::ShotExample shot{"s", "a lamp", {}, Personality::kSophistication, "Glow on"};
  const std::vector<prompting::ShotExample> shots = {shot};
  const auto parsed = parse_generation_prompt(prompting::render_chat_prompt(validate_request(req), shots).text);
  ASSERT_TRUE(parsed.has_value());
  EXPECT_EQ(parsed->description, req.description);
  EXPECT_EQ(parsed->attributes, req.attributes);
}

TEST(MockChat, NoAttributePromptParsesToEmptySet) {
  CaptionRequest req;
  req.description = "x";
  for (PromptVariant v : {PromptVariant::kSelective, PromptVariant::kNonSelective}) {
    req.variant = v;
    const auto parsed = parse_generation_prompt(prompting::render_chat_prompt(validate_request(req), {}).text);
    ASSERT_TRUE(parsed.has_value());
    EXPECT_TRUE(parsed->attributes.empty());
  }
}

TEST(MockChat, SuffixIsTonalityFree) {
  for (Personality p : kAllPersonalities) {
    std::string lower(kMockCaptionSuffix);
    for (std::string_view stem : tonality_stems(p)) EXPECT_EQ(lower.find(stem), std::string::npos);
  }
}

TEST(MockChat, JudgeAnswersWithPersonalityNames) {
  MockChatProvider mock(7);
  const auto prompt = prompting::render_geval_prompt("an honest and cheerful family breakfast");
  const ChatResponse r = mock.chat(user(prompt.text, 10));
  ASSERT_EQ(r.completions.size(), 10u);
  int sincerity = 0;
  for (const std::string& c : r.completions) {
    ASSERT_TRUE(c.starts_with("Brand personality: "));
    sincerity += c == "Brand personality: Sincerity" ? 1 : 0;
  }
  EXPECT_GE(sincerity, 5);
  EXPECT_EQ(mock.chat(user(prompt.text, 10)).completions, r.completions);
}

TEST(MockChat, OtherPromptsGetFixedAnswer) {
  MockChatProvider mock;
  EXPECT_EQ(mock.chat(user("hi", 3)).completions, (std::vector<std::string>(3, "mock completion")));
  EXPECT_EQ(mock.call_count(), 1);
}

TEST(MockEmbeddings, UnitVectorsDeterministicPerInput) {
  MockEmbeddingProvider mock(3);
  const Embedding a = mock.embed_text("hello", "m");
  EXPECT_EQ(a.dim(), 16u);
  double norm = 0;
  for (double v : a.vector) norm += v * v;
  EXPECT_NEAR(std::sqrt(norm), 1.0, 1e-12);
  EXPECT_EQ(mock.embed_text("hello", "m"), a);
  EXPECT_NE(mock.embed_text("hello!", "m"), a);
  EXPECT_NE(MockEmbeddingProvider(4).embed_text("hello", "m"), a);
  EXPECT_THROW(mock.embed_text("", "m"), Error);
}

TEST(MockEmbeddings, ImagesMustResolve) {
  MockEmbeddingProvider mock;
  const auto path = std::filesystem::temp_directory_path() / "brandcap_mock_img_001.jpg";
  std::ofstream(path) << "x";
  EXPECT_EQ(mock.embed_image(path.string(), "clip").dim(), 16u);
  EXPECT_EQ(mock.embed_image(path.string(), "clip"), mock.embed_image(path.string(), "clip"));
  EXPECT_EQ(mock.embed_image("https://cdn.example/p.jpg", "clip").dim(), 16u);
  try {
    mock.embed_image("missing_img.jpg", "clip");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kImageNotFound);
  }
  std::filesystem::remove(path);
}

TEST(MockCaption, DescribesByReference) {
  MockCaptionProvider mock;
  EXPECT_EQ(mock.describe_image("https://cdn.example/x.jpg", "blip"), "a photo referenced by https://cdn.example/x.jpg");
  EXPECT_THROW(mock.describe_image("nope.jpg", "blip"), Error);
}

TEST(ScriptedChat, ReplaysInOrder) {
  ScriptedChatProvider s;
  s.push({"a"});
  s.push_error(ErrorKind::kProviderUnavailable, "down");
  s.push({"b", "c"});
  EXPECT_EQ(s.chat(user("1")).completions, std::vector<std::string>{"a"});
  EXPECT_THROW(s.chat(user("2")), Error);
  EXPECT_EQ(s.chat(user("3")).completions, (std::vector<std::string>{"b", "c"}));
  EXPECT_THROW(s.chat(user("4")), Error);
  EXPECT_EQ(s.call_count(), 4);
  EXPECT_EQ(s.requests()[2].messages[0].content, "3");
}

TEST(ImageRefs, Resolvability) {
  EXPECT_TRUE(is_remote_ref("https://a.b/c.jpg"));
  EXPECT_TRUE(is_remote_ref("HTTP://a"));
  EXPECT_FALSE(is_remote_ref("https://"));
  EXPECT_FALSE(is_remote_ref("https:///x"));
  EXPECT_FALSE(is_remote_ref("ftp://a"));
  EXPECT_FALSE(is_resolvable_image(""));
  EXPECT_FALSE(is_resolvable_image(std::filesystem::temp_directory_path().string()));
}

}  // namespace
}  // namespace brandcap::providers

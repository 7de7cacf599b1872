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

#include "brandcap/pipeline/pipeline.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <memory>

#include <unistd.h>

#include "brandcap/core/error.h"
#include "brandcap/providers/mock.h"
#include "brandcap/textproc/emoji.h"
#include "brandcap/textproc/presence.h"
#include "brandcap/textproc/rules.h"

namespace brandcap::pipeline {
namespace {

using providers::MockCaptionProvider;
using providers::MockChatProvider;
using providers::MockEmbeddingProvider;
using providers::ScriptedChatProvider;

CaptionRequest bed_request() {
  CaptionRequest r;
  r.description = "a bed with a green comforter and a wooden headboard";
  r.personality = Personality::kSophistication;
  r.attributes.named_entities = {"this season"};
  return r;
}

struct MockStack {
  std::shared_ptr<MockChatProvider> chat = std::make_shared<MockChatProvider>(7);
  std::shared_ptr<MockCaptionProvider> captioner = std::make_shared<MockCaptionProvider>();
  providers::ProviderSet set() const {
    providers::ProviderSet ps;
    ps.chat = chat;
    ps.embeddings = std::make_shared<MockEmbeddingProvider>(7);
    ps.captioner = captioner;
    ps.chat_model = "mock-chat";
    ps.caption_model = "mock-caption";
    return ps;
  }
};

class TempImage {
 public:
  TempImage() {
    path_ = std::filesystem::temp_directory_path() / ("brandcap_pipeline_" + std::to_string(::getpid()) + ".jpg");
    std::ofstream(path_) << "not really a jpeg";
  }
  ~TempImage() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(GenerateCaption, MockCaptionCarriesEveryAttribute) {
  MockChatProvider chat(1);
  const GeneratedCaption g = generate_caption(chat, validate_request(bed_request()), {}, {});
  EXPECT_NE(g.text.find("this season"), std::string::npos);
  EXPECT_TRUE(textproc::attribute_presence(g.text, g.request.attributes).all_present);
  EXPECT_EQ(g.primary_caption, bed_request().description);
  EXPECT_EQ(g.regenerations, 0);
  EXPECT_TRUE(g.tonality_clean);
}

TEST(GenerateCaption, TextIsEmojizedRawOutput) {
  MockChatProvider chat(1);
  const GeneratedCaption g = generate_caption(chat, validate_request(bed_request()), {}, {});
  EXPECT_NE(g.raw_model_output.find(":sparkles:"), std::string::npos);
  EXPECT_EQ(g.text, textproc::emojize(g.raw_model_output));
  EXPECT_EQ(g.text.find(":sparkles:"), std::string::npos);
}

TEST(GenerateCaption, RegeneratesUntilTonalityWordIsGone) {
  ScriptedChatProvider chat;
  chat.push({"Pure sophisticated vibes tonight."});
  chat.push({"Quiet evenings, soft linen, the good kind of tired."});
  const GeneratedCaption g = generate_caption(chat, validate_request(bed_request()), {}, {});
  EXPECT_EQ(g.regenerations, 1);
  EXPECT_TRUE(g.tonality_clean);
  EXPECT_FALSE(textproc::contains_tonality_word(g.text, Personality::kSophistication));
  ASSERT_EQ(chat.requests().size(), 2u);
  EXPECT_EQ(chat.requests()[0].attempt, 0);
  EXPECT_EQ(chat.requests()[1].attempt, 1);
}

TEST(GenerateCaption, GivesUpAfterMaxRegenerations) {
  ScriptedChatProvider chat;
  for (int i = 0; i < 3; ++i) chat.push({"So sophisticated."});
  PipelineConfig cfg;
  cfg.max_regenerations = 2;
  const GeneratedCaption g = generate_caption(chat, validate_request(bed_request()), cfg, {});
  EXPECT_EQ(g.regenerations, 2);
  EXPECT_FALSE(g.tonality_clean);
  EXPECT_EQ(chat.remaining(), 0u);
}

TEST(GenerateCaption, NoFilteringWhenDisabled) {
  ScriptedChatProvider chat;
  chat.push({"So sophisticated."});
  PipelineConfig cfg;
  cfg.post_filter_tonality = false;
  const GeneratedCaption g = generate_caption(chat, validate_request(bed_request()), cfg, {});
  EXPECT_EQ(g.regenerations, 0);
  EXPECT_FALSE(g.tonality_clean);
}

TEST(GenerateCaption, EmptyCompletionIsAnError) {
  ScriptedChatProvider chat;
  chat.push({"   "});
  try {
    generate_caption(chat, validate_request(bed_request()), {}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptyCompletion);
  }
}

TEST(GenerateCaption, ShotCountMustMatchRequest) {
  MockChatProvider chat;
  CaptionRequest r = bed_request();
  r.shots = 1;
  try {
    generate_caption(chat, validate_request(r), {}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kShotCountMismatch);
  }
}

TEST(GenerateCaption, RequestModelOverridesConfig) {
  ScriptedChatProvider chat;
  chat.push({"Soft light, slow mornings."});
  CaptionRequest r = bed_request();
  r.model_id = "from-request";
  PipelineConfig cfg;
  cfg.chat.model_id = "from-config";
  generate_caption(chat, validate_request(r), cfg, {});
  EXPECT_EQ(chat.requests()[0].params.model_id, "from-request");
  EXPECT_EQ(chat.requests()[0].params.n, 1);
}

TEST(GenerateCaption, InstructionEndpointSendsInstruction) {
  ScriptedChatProvider chat;
  chat.push({"Soft light, slow mornings."});
  PipelineConfig cfg;
  cfg.instruction_endpoint = true;
  generate_caption(chat, validate_request(bed_request()), cfg, {});
  EXPECT_EQ(chat.requests()[0].messages[0].content,
            prompting::render_instruction(validate_request(bed_request())).text);
}

TEST(GenerateCaption, DeterministicUnderMock) {
  MockChatProvider a(3);
  MockChatProvider b(3);
  EXPECT_EQ(generate_caption(a, validate_request(bed_request()), {}, {}),
            generate_caption(b, validate_request(bed_request()), {}, {}));
}

TEST(EndToEnd, DescribesImageThenGenerates) {
  TempImage img;
  MockStack stack;
  EndToEndInput in;
  in.image_ref = img.path();
  in.personality = Personality::kCompetence;
  in.attributes.usernames = {"@brooklynmarriott"};
  const GeneratedCaption g = generate_end_to_end(stack.set(), in, {}, {});
  EXPECT_EQ(stack.captioner->call_count(), 1);
  EXPECT_EQ(g.primary_caption, "a photo referenced by " + img.path());
  EXPECT_EQ(g.image_ref, img.path());
  EXPECT_EQ(g.request.model_id, "mock-chat");
  EXPECT_NE(g.text.find("@brooklynmarriott"), std::string::npos);
}

TEST(EndToEnd, DescriptionOverrideSkipsCaptioner) {
  MockStack stack;
  EndToEndInput in;
  in.image_ref = "missing.jpg";
  in.description = "a bed with a green comforter";
  const GeneratedCaption g = generate_end_to_end(stack.set(), in, {}, {});
  EXPECT_EQ(stack.captioner->call_count(), 0);
  EXPECT_EQ(g.primary_caption, "a bed with a green comforter");
}

TEST(EndToEnd, OverrideMatchingCaptionerGivesSameResult) {
  TempImage img;
  MockStack a;
  MockStack b;
  EndToEndInput from_image;
  from_image.image_ref = img.path();
  EndToEndInput from_text = from_image;
  from_text.description = "a photo referenced by " + img.path();
  EXPECT_EQ(generate_end_to_end(a.set(), from_image, {}, {}), generate_end_to_end(b.set(), from_text, {}, {}));
}

TEST(EndToEnd, UnresolvableImageWithoutDescriptionFails) {
  MockStack stack;
  EndToEndInput in;
  in.image_ref = "/definitely/not/here.jpg";
  try {
    generate_end_to_end(stack.set(), in, {}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPreconditionViolation);
  }
  EndToEndInput nothing;
  nothing.description = "   ";
  EXPECT_THROW(generate_end_to_end(stack.set(), nothing, {}, {}), Error);
}

}  // namespace
}  // namespace brandcap::pipeline

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

#include "brandcap/core/attributes.h"

#include <gtest/gtest.h>

namespace brandcap {
namespace {

TEST(AttributeGrammar, Hashtags) {
  EXPECT_TRUE(is_valid_hashtag("#homeinspo"));
  EXPECT_TRUE(is_valid_hashtag("#x_1"));
  EXPECT_TRUE(is_valid_hashtag("#caf\xC3\xA9"));
  EXPECT_FALSE(is_valid_hashtag("#"));
  EXPECT_FALSE(is_valid_hashtag("homeinspo"));
  EXPECT_FALSE(is_valid_hashtag("#a b"));
  EXPECT_FALSE(is_valid_hashtag("#a.b"));
}

TEST(AttributeGrammar, Usernames) {
  EXPECT_TRUE(is_valid_username("@wba_global"));
  EXPECT_TRUE(is_valid_username("@a.b"));
  EXPECT_FALSE(is_valid_username("@"));
  EXPECT_FALSE(is_valid_username("@a-b"));
  EXPECT_FALSE(is_valid_username("a"));
}

TEST(AttributeGrammar, Urls) {
  EXPECT_TRUE(is_valid_url("https://ex.am/p"));
  EXPECT_TRUE(is_valid_url("http://a"));
  EXPECT_TRUE(is_valid_url("www.a.com"));
  EXPECT_FALSE(is_valid_url("https://"));
  EXPECT_FALSE(is_valid_url("ex.am"));
  EXPECT_FALSE(is_valid_url("https://a b"));
}

TEST(AttributeSet, KindsPresentAndAccess) {
  AttributeSet a;
  EXPECT_TRUE(a.empty());
  EXPECT_EQ(a.kinds_present(), 0);
  a.of(AttributeKind::kLinks).push_back("www.a.com");
  a.of(AttributeKind::kHashtags).push_back("#x");
  EXPECT_EQ(a.urls.size(), 1u);
  EXPECT_EQ(a.hashtags.size(), 1u);
  EXPECT_EQ(a.kinds_present(), 2);
  EXPECT_FALSE(a.empty());
}

TEST(AttributeKindNames, LabelsAndKeys) {
  EXPECT_EQ(prompt_label(AttributeKind::kNamedEntities), "Named Entities");
  EXPECT_EQ(prompt_label(AttributeKind::kLinks), "Links");
  EXPECT_EQ(report_key(AttributeKind::kLinks), "urls");
  EXPECT_EQ(report_key(AttributeKind::kNamedEntities), "entities");
  EXPECT_EQ(prompt_noun(AttributeKind::kNamedEntities), "named entities");
}

}  // namespace
}  // namespace brandcap

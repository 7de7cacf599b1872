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

#include "brandcap/prompting/template.h"

#include <gtest/gtest.h>

#include "brandcap/core/error.h"

namespace brandcap::prompting {
namespace {

TEST(RenderTemplate, SubstitutesPlaceholders) {
  EXPECT_EQ(render_template("a {x} b {y}", {{"x", "1"}, {"y", "2"}}), "a 1 b 2");
}

TEST(RenderTemplate, SubstitutionIsSinglePass) {
  EXPECT_EQ(render_template("{x}", {{"x", "{y}"}, {"y", "no"}}), "{y}");
}

TEST(RenderTemplate, DropsLoneEmptyPlaceholderLines) {
  EXPECT_EQ(render_template("a\n{x}\nb", {{"x", ""}}), "a\nb");
  EXPECT_EQ(render_template("a\n{x}", {{"x", ""}}), "a");
  EXPECT_EQ(render_template("a {x}\nb", {{"x", ""}}), "a \nb");
  EXPECT_EQ(render_template("a\n{x}\nb", {{"x", "v"}}), "a\nv\nb");
}

TEST(RenderTemplate, UnknownPlaceholderThrows) {
  try {
    render_template("{missing}", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPreconditionViolation);
  }
}

TEST(RenderTemplate, UnclosedBraceIsLiteral) {
  EXPECT_EQ(render_template("a { b", {}), "a { b");
}

}  // namespace
}  // namespace brandcap::prompting

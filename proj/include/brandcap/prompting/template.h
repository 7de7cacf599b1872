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

#include <map>
#include <string>
#include <string_view>

namespace brandcap::prompting {

using TemplateVars = std::map<std::string, std::string, std::less<>>;

// Replaces each {name} in tmpl with vars[name] in a single left-to-right pass;
// substituted text is never rescanned. A template line that consists solely
// of one placeholder whose value is empty is dropped together with its line
// break. Unknown placeholders throw Error(kPreconditionViolation).
std::string render_template(std::string_view tmpl, const TemplateVars& vars);

}  // namespace brandcap::prompting

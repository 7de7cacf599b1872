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

#include <string>

#include "brandcap/core/error.h"

namespace brandcap::prompting {
namespace {

// Expands placeholders within one line ([begin, end) of tmpl, no LF).
void render_line(std::string_view line, const TemplateVars& vars, std::string& out) {
  std::size_t i = 0;
  while (i < line.size()) {
    const std::size_t open = line.find('{', i);
    if (open == std::string_view::npos) {
      out.append(line.substr(i));
      return;
    }
    const std::size_t close = line.find('}', open + 1);
    if (close == std::string_view::npos) {
      out.append(line.substr(i));
      return;
    }
    out.append(line.substr(i, open - i));
    const std::string_view name = line.substr(open + 1, close - open - 1);
    const auto it = vars.find(name);
    if (it == vars.end()) {
      raise(ErrorKind::kPreconditionViolation,
            "template placeholder {" + std::string(name) + "} has no value");
    }
    out.append(it->second);
    i = close + 1;
  }
}

bool is_lone_empty_placeholder(std::string_view line, const TemplateVars& vars) {
  if (line.size() < 3 || line.front() != '{' || line.back() != '}') return false;
  const std::string_view name = line.substr(1, line.size() - 2);
  if (name.find_first_of("{}") != std::string_view::npos) return false;
  const auto it = vars.find(name);
  return it != vars.end() && it->second.empty();
}

}  // namespace

std::string render_template(std::string_view tmpl, const TemplateVars& vars) {
  std::string out;
  std::size_t pos = 0;
  while (pos <= tmpl.size()) {
    const std::size_t lf = tmpl.find('\n', pos);
    const bool last = lf == std::string_view::npos;
    const std::string_view line = tmpl.substr(pos, last ? std::string_view::npos : lf - pos);
    if (!is_lone_empty_placeholder(line, vars)) {
      render_line(line, vars, out);
      if (!last) out.push_back('\n');
    } else if (last && !out.empty() && out.back() == '\n') {
      // A dropped final line takes the preceding line break with it.
      out.pop_back();
    }
    if (last) break;
    pos = lf + 1;
  }
  return out;
}

}  // namespace brandcap::prompting

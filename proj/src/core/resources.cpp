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

#include "brandcap/core/resources.h"

#include <string>

#include "brandcap/core/error.h"

namespace brandcap::resources {

std::string_view get(std::string_view name) {
  for (const Resource& r : all()) {
    if (r.name == name) return r.data;
  }
  raise(ErrorKind::kIoError, "no bundled resource named '" + std::string(name) + "'");
}

std::string_view text(std::string_view name) {
  std::string_view data = get(name);
  if (!data.empty() && data.back() == '\n') data.remove_suffix(1);
  return data;
}

}  // namespace brandcap::resources

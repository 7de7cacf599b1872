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

#include "brandcap/providers/provider.h"

#include <filesystem>
#include <string>
#include <system_error>

#include "brandcap/core/error.h"
#include "brandcap/core/strings.h"

namespace brandcap::providers {

bool is_remote_ref(std::string_view image_ref) {
  const std::string lower = ascii_lower(image_ref.substr(0, 8));
  std::size_t host = 0;
  if (lower.starts_with("https://")) {
    host = 8;
  } else if (lower.starts_with("http://")) {
    host = 7;
  } else {
    return false;
  }
  if (image_ref.size() <= host) return false;
  for (char c : image_ref) {
    if (is_ascii_space(c)) return false;
  }
  return image_ref[host] != '/';
}

bool is_resolvable_image(std::string_view image_ref) {
  if (image_ref.empty()) return false;
  if (is_remote_ref(image_ref)) return true;
  std::error_code ec;
  return std::filesystem::is_regular_file(std::filesystem::path(std::string(image_ref)), ec);
}

void require_resolvable_image(std::string_view image_ref) {
  if (!is_resolvable_image(image_ref)) {
    raise(ErrorKind::kImageNotFound, "image '" + std::string(image_ref) + "' does not exist");
  }
}

}  // namespace brandcap::providers

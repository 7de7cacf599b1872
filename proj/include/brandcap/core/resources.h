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

#include <string_view>
#include <vector>

// Text resources compiled into the library (templates, emoji table, brand
// map, stopwords). Names are paths relative to the resources/ directory.
namespace brandcap::resources {

struct Resource {
  std::string_view name;
  std::string_view data;
};

const std::vector<Resource>& all();

// Raw bytes of a resource. Throws Error(kIoError) for unknown names.
std::string_view get(std::string_view name);

// Like get() but with a single trailing LF removed.
std::string_view text(std::string_view name);

}  // namespace brandcap::resources

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

#include <memory>
#include <string>

#include "brandcap/interfaces/service.h"
#include "brandcap/providers/limiter.h"

namespace brandcap::interfaces {

struct HttpResponse {
  int status = 200;
  std::string body;  // JSON
};

// POST /v1/captions. 200 with the generated caption; 400 with
// {"errors": [{field, message}]} for invalid bodies; 429 when every
// in-flight slot is taken; 502 on provider failure.
HttpResponse handle_captions(const GenerationService& service, providers::InflightLimiter& limiter,
                             std::string_view body);

// Stateless HTTP front end over a shared service. Handlers run concurrently
// on the server's thread pool.
class CaptionServer {
 public:
  CaptionServer(const GenerationService& service, int max_inflight);
  ~CaptionServer();
  CaptionServer(const CaptionServer&) = delete;
  CaptionServer& operator=(const CaptionServer&) = delete;

  // Binds (port 0 picks a free one) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace brandcap::interfaces

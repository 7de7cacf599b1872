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

#include "brandcap/interfaces/server.h"

#include <httplib.h>

#include "brandcap/core/error.h"
#include "brandcap/core/json_codec.h"

namespace brandcap::interfaces {
namespace {

HttpResponse error_response(int status, const std::vector<FieldError>& errors) {
  Json arr = Json::array();
  for (const FieldError& e : errors) arr.push_back({{"field", e.field}, {"message", e.message}});
  return {status, Json{{"errors", arr}}.dump()};
}

}  // namespace

HttpResponse handle_captions(const GenerationService& service, providers::InflightLimiter& limiter,
                             std::string_view body) {
  Json j;
  try {
    j = Json::parse(body);
  } catch (const nlohmann::json::exception&) {
    return error_response(400, {{"body", "request body is not valid JSON"}});
  }
  const pipeline::PipelineConfig& d = service.defaults();
  const ParsedInput parsed = parse_generate_input(j, d.variant, d.shots);
  if (!parsed.errors.empty()) return error_response(400, parsed.errors);

  std::optional<providers::InflightLimiter::Permit> permit = limiter.try_acquire();
  if (!permit) return error_response(429, {{"body", "too many requests in flight"}});
  try {
    const GeneratedCaption g = service.generate(parsed.input);
    return {200, json_codec::to_json(g).dump()};
  } catch (const Error& e) {
    if (is_provider_error(e.kind())) return error_response(502, {{"provider", e.what()}});
    return error_response(400, {{"body", e.what()}});
  }
}

struct CaptionServer::Impl {
  const GenerationService& service;
  providers::InflightLimiter limiter;
  httplib::Server server;

  Impl(const GenerationService& s, int max_inflight) : service(s), limiter(max_inflight) {}
};

CaptionServer::CaptionServer(const GenerationService& service, int max_inflight)
    : impl_(std::make_unique<Impl>(service, max_inflight)) {
  Impl* impl = impl_.get();
  impl->server.Post("/v1/captions", [impl](const httplib::Request& req, httplib::Response& res) {
    const HttpResponse r = handle_captions(impl->service, impl->limiter, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  });
  impl->server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"status":"ok"})", "application/json");
  });
}

CaptionServer::~CaptionServer() { stop(); }

int CaptionServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool CaptionServer::listen() { return impl_->server.listen_after_bind(); }

void CaptionServer::stop() { impl_->server.stop(); }

}  // namespace brandcap::interfaces

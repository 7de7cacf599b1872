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

#include "brandcap/providers/openai.h"

#include <httplib.h>
#include <openssl/evp.h>

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "brandcap/core/error.h"
#include "brandcap/core/strings.h"

namespace brandcap::providers {
namespace {

using Json = nlohmann::json;

struct HttpOutcome {
  int status = 0;  // 0 when no response arrived
  std::string body;
  std::string transport_error;
};

struct Endpoint {
  std::string origin;       // scheme://host[:port]
  std::string path_prefix;  // "" or "/v1"
};

Endpoint parse_base_url(const std::string& base_url) {
  const std::size_t scheme = base_url.find("://");
  if (scheme == std::string::npos) {
    raise(ErrorKind::kPreconditionViolation, "provider base URL '" + base_url + "' has no scheme");
  }
  const std::size_t path = base_url.find('/', scheme + 3);
  Endpoint e;
  e.origin = base_url.substr(0, path);
  if (path != std::string::npos) e.path_prefix = base_url.substr(path);
  while (!e.path_prefix.empty() && e.path_prefix.back() == '/') e.path_prefix.pop_back();
  return e;
}

std::string base64(std::string_view bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3), '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                reinterpret_cast<const unsigned char*>(bytes.data()),
                                static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::string mime_for(std::string_view path) {
  const std::string lower = ascii_lower(path);
  if (lower.ends_with(".png")) return "image/png";
  if (lower.ends_with(".gif")) return "image/gif";
  if (lower.ends_with(".webp")) return "image/webp";
  return "image/jpeg";
}

// Remote refs pass through; local files become data URLs.
std::string image_url(std::string_view image_ref) {
  require_resolvable_image(image_ref);
  if (is_remote_ref(image_ref)) return std::string(image_ref);
  std::ifstream in(std::string(image_ref), std::ios::binary);
  if (!in) raise(ErrorKind::kImageNotFound, "cannot read image '" + std::string(image_ref) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return "data:" + mime_for(image_ref) + ";base64," + base64(buf.str());
}

std::string snippet(const std::string& body) {
  std::string s = body.substr(0, 200);
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

Embedding parse_embedding(const std::string& body, std::string_view model_id) {
  const Json j = Json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.contains("data") || !j["data"].is_array() || j["data"].empty()) {
    raise(ErrorKind::kMalformedResponse, "embedding response has no data array");
  }
  const Json& first = j["data"][0];
  if (!first.contains("embedding") || !first["embedding"].is_array() || first["embedding"].empty()) {
    raise(ErrorKind::kMalformedResponse, "embedding response has no embedding vector");
  }
  Embedding e;
  e.model_id = std::string(model_id);
  for (const Json& v : first["embedding"]) {
    if (!v.is_number()) raise(ErrorKind::kMalformedResponse, "embedding entries must be numbers");
    const double d = v.get<double>();
    if (!std::isfinite(d)) raise(ErrorKind::kMalformedResponse, "embedding entries must be finite");
    e.vector.push_back(d);
  }
  return e;
}

}  // namespace

std::chrono::milliseconds RetryPolicy::delay(int retry) const {
  const double factor = std::pow(std::max(1.0, multiplier), std::max(0, retry));
  return std::chrono::milliseconds(static_cast<std::int64_t>(static_cast<double>(initial_backoff.count()) * factor));
}

std::string redact(std::string text, std::string_view secret) {
  if (secret.empty()) return text;
  for (std::size_t pos = text.find(secret); pos != std::string::npos; pos = text.find(secret, pos + 3)) {
    text.replace(pos, secret.size(), "***");
  }
  return text;
}

struct OpenAiClient::Impl {
  OpenAiSettings settings;
  Endpoint endpoint;
  Sleeper sleeper;
  InflightLimiter limiter;
  std::atomic<int> requests{0};

  Impl(OpenAiSettings s, Sleeper sl)
      : settings(std::move(s)),
        endpoint(parse_base_url(settings.base_url)),
        sleeper(sl ? std::move(sl) : Sleeper([](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); })),
        limiter(settings.max_inflight) {}

  [[noreturn]] void fail(ErrorKind kind, const std::string& message) const {
    raise(kind, redact(message, settings.api_key));
  }

  HttpOutcome post_once(const std::string& path, const std::string& body) {
    const InflightLimiter::Permit permit = limiter.acquire();
    ++requests;
    httplib::Client client(endpoint.origin);
    client.set_connection_timeout(settings.timeout);
    client.set_read_timeout(settings.timeout);
    client.set_write_timeout(settings.timeout);
    httplib::Headers headers;
    if (!settings.api_key.empty()) headers.emplace("Authorization", "Bearer " + settings.api_key);
    const httplib::Result res = client.Post(endpoint.path_prefix + path, headers, body, "application/json");
    HttpOutcome out;
    if (!res) {
      out.transport_error = httplib::to_string(res.error());
      return out;
    }
    out.status = res->status;
    out.body = res->body;
    return out;
  }

  // Sends with retries. Returns the final non-retryable outcome (2xx or 4xx
  // other than 429); exhausting retries raises kProviderUnavailable.
  HttpOutcome post(const std::string& path, const std::string& body) {
    const RetryPolicy& retry = settings.retry;
    HttpOutcome last;
    for (int attempt = 0; attempt <= std::max(0, retry.max_retries); ++attempt) {
      if (attempt > 0) sleeper(retry.delay(attempt - 1));
      last = post_once(path, body);
      const bool transient = last.status == 0 || last.status == 429 || last.status >= 500;
      if (!transient) return last;
    }
    const std::string why = last.status == 0 ? "transport error: " + last.transport_error
                                             : "HTTP " + std::to_string(last.status) + ": " + snippet(last.body);
    fail(ErrorKind::kProviderUnavailable, endpoint.origin + endpoint.path_prefix + path + " failed after " +
                                              std::to_string(1 + std::max(0, retry.max_retries)) +
                                              " attempts (" + why + ")");
  }

  void check_status(const HttpOutcome& out, const std::string& path) const {
    if (out.status >= 200 && out.status < 300) return;
    const std::string what = path + " returned HTTP " + std::to_string(out.status) + ": " + snippet(out.body);
    if (out.status == 401 || out.status == 403) fail(ErrorKind::kAuthError, what);
    fail(ErrorKind::kRequestRejected, what);
  }

  std::vector<std::string> parse_choices(const std::string& body) const {
    const Json j = Json::parse(body, nullptr, false);
    if (j.is_discarded() || !j.contains("choices") || !j["choices"].is_array()) {
      fail(ErrorKind::kMalformedResponse, "chat response has no choices array: " + snippet(body));
    }
    std::vector<std::pair<std::int64_t, std::string>> indexed;
    std::int64_t position = 0;
    for (const Json& c : j["choices"]) {
      std::int64_t index = position++;
      if (c.contains("index") && c["index"].is_number_integer()) index = c["index"].get<std::int64_t>();
      std::string text;
      if (c.contains("message") && c["message"].is_object()) {
        const Json& content = c["message"].value("content", Json());
        if (content.is_string()) text = content.get<std::string>();
      } else if (c.contains("text") && c["text"].is_string()) {
        text = c["text"].get<std::string>();
      } else {
        fail(ErrorKind::kMalformedResponse, "chat choice has neither message nor text");
      }
      indexed.emplace_back(index, std::move(text));
    }
    std::stable_sort(indexed.begin(), indexed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> out;
    for (auto& [i, t] : indexed) out.push_back(std::move(t));
    return out;
  }

  Json chat_body(const ChatRequest& r, int n) const {
    Json messages = Json::array();
    for (const ChatMessage& m : r.messages) messages.push_back({{"role", m.role}, {"content", m.content}});
    const ChatParams& p = r.params;
    return Json{{"model", p.model_id},
                {"messages", messages},
                {"temperature", p.temperature},
                {"top_p", p.top_p},
                {"frequency_penalty", p.frequency_penalty},
                {"presence_penalty", p.presence_penalty},
                {"n", n}};
  }
};

OpenAiClient::OpenAiClient(OpenAiSettings settings, Sleeper sleeper)
    : impl_(std::make_unique<Impl>(std::move(settings), std::move(sleeper))) {}

OpenAiClient::~OpenAiClient() = default;

int OpenAiClient::request_count() const { return impl_->requests.load(); }

ChatResponse OpenAiClient::chat(const ChatRequest& request) {
  if (request.messages.empty()) raise(ErrorKind::kPreconditionViolation, "chat needs at least one message");
  const auto started = std::chrono::steady_clock::now();
  const std::string path = "/chat/completions";
  const int n = std::max(1, request.params.n);
  ChatResponse response;
  bool sequential = false;

  HttpOutcome first = impl_->post(path, impl_->chat_body(request, n).dump());
  if (first.status == 400 && n > 1) {
    sequential = true;
  } else {
    impl_->check_status(first, path);
    response.completions = impl_->parse_choices(first.body);
    if (response.completions.size() > static_cast<std::size_t>(n)) response.completions.resize(n);
  }
  // Sequential fallback, and top-up when the endpoint returned fewer choices.
  const int rounds_cap = n;
  for (int round = 0; static_cast<int>(response.completions.size()) < n && round < rounds_cap; ++round) {
    const int want = sequential ? 1 : n - static_cast<int>(response.completions.size());
    HttpOutcome more = impl_->post(path, impl_->chat_body(request, want).dump());
    impl_->check_status(more, path);
    std::vector<std::string> extra = impl_->parse_choices(more.body);
    if (extra.empty()) impl_->fail(ErrorKind::kMalformedResponse, "chat response carried no choices");
    for (std::string& e : extra) {
      if (static_cast<int>(response.completions.size()) < n) response.completions.push_back(std::move(e));
    }
  }
  if (static_cast<int>(response.completions.size()) < n) {
    impl_->fail(ErrorKind::kMalformedResponse, "endpoint returned " + std::to_string(response.completions.size()) +
                                                   " of " + std::to_string(n) + " completions");
  }
  response.latency_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
  return response;
}

Embedding OpenAiClient::embed_text(std::string_view text, std::string_view model_id) {
  if (text.empty()) raise(ErrorKind::kPreconditionViolation, "cannot embed empty text");
  const std::string path = "/embeddings";
  const Json body = {{"model", model_id}, {"input", text}};
  const HttpOutcome out = impl_->post(path, body.dump());
  impl_->check_status(out, path);
  return parse_embedding(out.body, model_id);
}

Embedding OpenAiClient::embed_image(std::string_view image_ref, std::string_view model_id) {
  const std::string path = "/embeddings";
  const Json body = {{"model", model_id}, {"input", Json::array({Json{{"image", image_url(image_ref)}}})}};
  const HttpOutcome out = impl_->post(path, body.dump());
  impl_->check_status(out, path);
  return parse_embedding(out.body, model_id);
}

std::string OpenAiClient::describe_image(std::string_view image_ref, std::string_view model_id) {
  const std::string path = "/chat/completions";
  const Json content = Json::array({Json{{"type", "text"}, {"text", impl_->settings.describe_prompt}},
                                    Json{{"type", "image_url"}, {"image_url", {{"url", image_url(image_ref)}}}}});
  const Json body = {{"model", model_id},
                     {"messages", Json::array({Json{{"role", "user"}, {"content", content}}})},
                     {"temperature", 0.0},
                     {"n", 1}};
  const HttpOutcome out = impl_->post(path, body.dump());
  impl_->check_status(out, path);
  const std::vector<std::string> choices = impl_->parse_choices(out.body);
  const std::string line = choices.empty() ? std::string() : collapse_whitespace(choices[0]);
  if (line.empty()) raise(ErrorKind::kEmptyCompletion, "captioning endpoint returned an empty description");
  return line;
}

}  // namespace brandcap::providers

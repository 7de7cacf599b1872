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

#include <httplib.h>

#include <atomic>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

namespace brandcap::testing {

// In-process OpenAI-compatible endpoint. Each handler sees the parsed body
// and returns (status, body). Defaults answer chat with n numbered choices
// and embeddings with a fixed vector.
class FakeOpenAiServer {
 public:
  using Json = nlohmann::json;
  using Handler = std::function<std::pair<int, std::string>(const Json& body, const httplib::Request&)>;

  FakeOpenAiServer() {
    chat_ = [](const Json& body, const httplib::Request&) {
      Json choices = Json::array();
      const int n = body.value("n", 1);
      for (int i = 0; i < n; ++i) {
        choices.push_back({{"index", i}, {"message", {{"role", "assistant"}, {"content", "choice " + std::to_string(i)}}}});
      }
      return std::make_pair(200, Json{{"choices", choices}}.dump());
    };
    embeddings_ = [](const Json&, const httplib::Request&) {
      return std::make_pair(200, Json{{"data", Json::array({Json{{"embedding", {0.6, 0.8}}}})}}.dump());
    };
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req, httplib::Response& res) {
      dispatch(chat_, req, res);
    });
    server_.Post("/v1/embeddings", [this](const httplib::Request& req, httplib::Response& res) {
      dispatch(embeddings_, req, res);
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~FakeOpenAiServer() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }

  void on_chat(Handler h) {
    std::lock_guard lock(mu_);
    chat_ = std::move(h);
  }
  void on_embeddings(Handler h) {
    std::lock_guard lock(mu_);
    embeddings_ = std::move(h);
  }

  int hits() const { return hits_.load(); }
  std::vector<Json> bodies() const {
    std::lock_guard lock(mu_);
    return bodies_;
  }
  std::vector<std::string> auth_headers() const {
    std::lock_guard lock(mu_);
    return auth_;
  }

 private:
  void dispatch(Handler& h, const httplib::Request& req, httplib::Response& res) {
    ++hits_;
    Json body = Json::parse(req.body, nullptr, false);
    Handler local;
    {
      std::lock_guard lock(mu_);
      bodies_.push_back(body);
      auth_.push_back(req.get_header_value("Authorization"));
      local = h;
    }
    auto [status, text] = local(body, req);
    res.status = status;
    res.set_content(text, "application/json");
  }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  mutable std::mutex mu_;
  Handler chat_;
  Handler embeddings_;
  std::vector<Json> bodies_;
  std::vector<std::string> auth_;
  std::atomic<int> hits_{0};
};

}  // namespace brandcap::testing

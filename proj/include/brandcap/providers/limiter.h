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

#include <optional>
#include <semaphore>

namespace brandcap::providers {

// Bounds concurrent provider requests. Permits are returned when the Permit
// goes out of scope.
class InflightLimiter {
 public:
  static constexpr int kMaxPermits = 1024;

  // max_inflight is clamped to [1, kMaxPermits].
  explicit InflightLimiter(int max_inflight = 4);

  class Permit {
   public:
    explicit Permit(InflightLimiter* owner) : owner_(owner) {}
    Permit(Permit&& other) noexcept : owner_(other.owner_) { other.owner_ = nullptr; }
    Permit& operator=(Permit&&) = delete;
    Permit(const Permit&) = delete;
    ~Permit() {
      if (owner_ != nullptr) owner_->slots_.release();
    }

   private:
    InflightLimiter* owner_;
  };

  Permit acquire();
  std::optional<Permit> try_acquire();
  int capacity() const { return capacity_; }

 private:
  int capacity_;
  std::counting_semaphore<kMaxPermits> slots_;
};

}  // namespace brandcap::providers

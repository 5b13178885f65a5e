// Copyright 2026 The dpst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPST_HTTP_H_
#define DPST_HTTP_H_

#include <chrono>
#include <cstddef>
#include <string>

namespace dpst {

// Connection settings shared by the HTTP-backed providers.
struct HttpOptions {
  // Base URL, e.g. "http://127.0.0.1:8080" or "http://host:9000/api".
  std::string endpoint;
  std::chrono::milliseconds timeout{30000};
  // Total attempts including the first; backoff doubles after each failure.
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{500};
  std::size_t max_in_flight = 8;
  // Sent as "Authorization: Bearer <token>" when non-empty.
  std::string bearer_token;
};

}  // namespace dpst

#endif  // DPST_HTTP_H_

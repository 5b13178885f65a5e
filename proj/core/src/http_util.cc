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

#include "http_util.h"

#include <thread>

#include "httplib.h"

namespace dpst::internal {
namespace {

class Permit {
 public:
  explicit Permit(std::counting_semaphore<>& sem) : sem_(sem) {
    sem_.acquire();
  }
  ~Permit() { sem_.release(); }
  Permit(const Permit&) = delete;
  Permit& operator=(const Permit&) = delete;

 private:
  std::counting_semaphore<>& sem_;
};

}  // namespace

ParsedEndpoint ParseEndpoint(const std::string& url) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "endpoint needs a scheme (http://...): " + url);
  }
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http") {
    throw Error(ErrorCode::kInvalidArgument,
                "only plain http endpoints are supported: " + url);
  }
  const std::size_t path_start = url.find('/', scheme_end + 3);
  ParsedEndpoint out;
  out.origin = url.substr(0, path_start);
  if (path_start != std::string::npos) {
    out.path_prefix = url.substr(path_start);
    while (!out.path_prefix.empty() && out.path_prefix.back() == '/') {
      out.path_prefix.pop_back();
    }
  }
  return out;
}

JsonPoster::JsonPoster(HttpOptions options)
    : options_(std::move(options)),
      endpoint_(ParseEndpoint(options_.endpoint)),
      limiter_(std::make_shared<std::counting_semaphore<>>(
          static_cast<std::ptrdiff_t>(
              options_.max_in_flight == 0 ? 1 : options_.max_in_flight))) {
  if (options_.max_attempts < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_attempts must be >= 1");
  }
}

Json JsonPoster::Post(const std::string& path, const Json& body,
                      ErrorCode failure_code) const {
  const std::string payload = body.dump();
  const std::string full_path = endpoint_.path_prefix + path;
  const auto timeout_sec =
      std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
  const auto timeout_usec =
      std::chrono::duration_cast<std::chrono::microseconds>(options_.timeout -
                                                            timeout_sec);
  httplib::Headers headers;
  if (!options_.bearer_token.empty()) {
    headers.emplace("Authorization", "Bearer " + options_.bearer_token);
  }

  std::string last_error;
  auto backoff = options_.initial_backoff;
  for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    const Permit permit(*limiter_);
    httplib::Client client(endpoint_.origin);
    client.set_connection_timeout(timeout_sec.count(), timeout_usec.count());
    client.set_read_timeout(timeout_sec.count(), timeout_usec.count());
    client.set_write_timeout(timeout_sec.count(), timeout_usec.count());
    const auto res =
        client.Post(full_path, headers, payload, "application/json");
    if (!res) {
      last_error = "transport error: " + httplib::to_string(res.error());
    } else if (res->status != 200) {
      last_error = "HTTP " + std::to_string(res->status);
    } else {
      try {
        return Json::parse(res->body);
      } catch (const Json::parse_error& e) {
        last_error = std::string("invalid JSON response: ") + e.what();
      }
    }
  }
  throw Error(failure_code, "POST " + options_.endpoint + path +
                                " failed after " +
                                std::to_string(options_.max_attempts) +
                                " attempts: " + last_error);
}

}  // namespace dpst::internal

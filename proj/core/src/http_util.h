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

#ifndef DPST_SRC_HTTP_UTIL_H_
#define DPST_SRC_HTTP_UTIL_H_

#include <memory>
#include <semaphore>
#include <string>

#include "dpst/http.h"
#include "json_util.h"

namespace dpst::internal {

struct ParsedEndpoint {
  std::string origin;       // scheme://host[:port]
  std::string path_prefix;  // "" or "/something", no trailing slash
};

ParsedEndpoint ParseEndpoint(const std::string& url);

// POSTs `body` as JSON to endpoint + path, retrying transport errors and
// non-200 responses with exponential backoff. At most `max_in_flight`
// requests run concurrently per limiter. Throws `failure_code` once
// attempts are exhausted.
class JsonPoster {
 public:
  explicit JsonPoster(HttpOptions options);

  Json Post(const std::string& path, const Json& body,
            ErrorCode failure_code) const;

  const HttpOptions& options() const { return options_; }

 private:
  HttpOptions options_;
  ParsedEndpoint endpoint_;
  std::shared_ptr<std::counting_semaphore<>> limiter_;
};

}  // namespace dpst::internal

#endif  // DPST_SRC_HTTP_UTIL_H_

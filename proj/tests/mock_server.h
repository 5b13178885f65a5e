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

#ifndef DPST_TESTS_MOCK_SERVER_H_
#define DPST_TESTS_MOCK_SERVER_H_

#include <atomic>
#include <functional>
#include <string>
#include <thread>

#include "httplib.h"

namespace dpst::testing {

// Local HTTP server for one POST route. Handlers run on server threads.
class MockServer {
 public:
  using Handler =
      std::function<void(const httplib::Request&, httplib::Response&)>;

  MockServer(const std::string& path, Handler handler) {
    server_.Post(path, [this, handler](const httplib::Request& req,
                                       httplib::Response& res) {
      ++hits_;
      handler(req, res);
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~MockServer() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  int hits() const { return hits_.load(); }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<int> hits_{0};
};

}  // namespace dpst::testing

#endif  // DPST_TESTS_MOCK_SERVER_H_

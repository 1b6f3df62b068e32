// Copyright 2026 The zkgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Socket transports for the wire protocol. TCP carries the length-prefixed
// messages back to back; WebSocket carries each complete wire message
// (prefix included) as one binary message, so both decode identically.

#ifndef ZKG_NET_NET_H_
#define ZKG_NET_NET_H_

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>

#include "zkg/base/result.h"
#include "zkg/channel/transport.h"

namespace zkg::net {

enum class Scheme { kTcp, kWebSocket };

struct Endpoint {
  std::string host;
  uint16_t port = 0;
};

// "host:port"; port 0 asks the OS for a free port when binding.
Result<Endpoint> ParseEndpoint(std::string_view text);

struct ServerAddress {
  Scheme scheme = Scheme::kTcp;
  Endpoint endpoint;
  std::string path = "/";
};

// "tcp://host:port", "ws://host:port[/path]", or bare "host:port" for TCP.
Result<ServerAddress> ParseAddress(std::string_view text);

Result<std::unique_ptr<channel::MessageTransport>> Connect(const ServerAddress& address);

// Accepts connections on a background thread and runs `handler` for each on
// its own thread. For WebSocket the upgrade happens before the handler runs.
class Listener {
 public:
  using Handler = std::function<void(std::unique_ptr<channel::MessageTransport>)>;

  static Result<std::unique_ptr<Listener>> Bind(Scheme scheme, const Endpoint& endpoint,
                                                Handler handler);
  ~Listener();

  uint16_t port() const { return port_; }
  Scheme scheme() const { return scheme_; }

  // Stops accepting. Running handlers are left alone.
  void StopAccepting();
  // Blocks until every handler has returned.
  void WaitForConnections();

 private:
  struct Impl;
  Listener(Scheme scheme, Handler handler);
  void ConnectionStarted();
  void ConnectionFinished();

  const Scheme scheme_;
  const Handler handler_;
  uint16_t port_ = 0;
  std::unique_ptr<Impl> impl_;
  std::thread accept_thread_;

  std::mutex mu_;
  std::condition_variable idle_cv_;
  int active_ = 0;
};

}  // namespace zkg::net

#endif  // ZKG_NET_NET_H_

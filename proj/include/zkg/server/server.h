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

#ifndef ZKG_SERVER_SERVER_H_
#define ZKG_SERVER_SERVER_H_

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zkg/base/result.h"
#include "zkg/channel/transport.h"
#include "zkg/enclave/attestation.h"
#include "zkg/enclave/manifest.h"
#include "zkg/net/net.h"
#include "zkg/policy/lint.h"
#include "zkg/server/game_service.h"
#include "zkg/server/sinks.h"

namespace zkg::server {

// Relative paths in the file are resolved against the file's directory.
struct ServerConfig {
  std::optional<std::string> tcp_listen;
  std::optional<std::string> ws_listen;
  uint32_t k_min = policy::kDefaultKMin;
  std::filesystem::path manifest_path;
  // Full component graph for the boot lint. Without one the manifest is
  // linted on its own.
  std::optional<std::filesystem::path> graph_path;
  std::filesystem::path platform_key_path;
  std::filesystem::path sink_dir;
  // Test mode: every byte written to each client socket is mirrored to
  // <capture_dir>/conn-<n>.session.bin.
  std::optional<std::filesystem::path> capture_dir;
  // 64 hex characters. A fresh random key is drawn when absent.
  std::optional<std::filesystem::path> pseudonym_key_path;
  // Written once listening: {"tcp_port", "ws_port", "measurement"}.
  std::optional<std::filesystem::path> ready_file;

  static Result<ServerConfig> FromJson(const nlohmann::json& j,
                                       const std::filesystem::path& base_dir);
  static Result<ServerConfig> Load(const std::filesystem::path& path);
};

// Lints the graph the server would boot with. Empty means bootable.
Result<std::vector<policy::LintFinding>> BootLint(const ServerConfig& config,
                                                  const enclave::ComponentManifest& manifest);

class Server {
 public:
  // Refuses to build a server whose flows lint dirty: kLabelViolation with
  // the formatted findings as the message.
  static Result<std::unique_ptr<Server>> Create(const ServerConfig& config);
  ~Server();

  // Binds the configured listeners and writes the ready file.
  Status Start();
  // Stops accepting, closes every live connection and waits for them.
  void Stop();

  // Runs one client connection to completion on the calling thread.
  void ServeConnection(std::unique_ptr<channel::MessageTransport> transport);

  uint16_t tcp_port() const { return tcp_ ? tcp_->port() : 0; }
  uint16_t ws_port() const { return ws_ ? ws_->port() : 0; }
  const enclave::Measurement& measurement() const { return measurement_; }
  EgressSinks& sinks() { return *sinks_; }
  GameService& service() { return *service_; }

 private:
  Server() = default;

  ServerConfig config_;
  enclave::ComponentManifest manifest_;
  enclave::Measurement measurement_;
  std::optional<enclave::PlatformKey> platform_key_;
  std::unique_ptr<EgressSinks> sinks_;
  std::unique_ptr<GameService> service_;
  std::unique_ptr<net::Listener> tcp_;
  std::unique_ptr<net::Listener> ws_;

  std::mutex live_mu_;
  bool stopping_ = false;
  uint64_t next_conn_ = 0;
  std::map<uint64_t, std::shared_ptr<channel::MessageTransport>> live_;
};

}  // namespace zkg::server

#endif  // ZKG_SERVER_SERVER_H_

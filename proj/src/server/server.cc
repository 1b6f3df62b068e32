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

#include "zkg/server/server.h"

#include <algorithm>
#include <fstream>

#include "zkg/base/crypto.h"
#include "zkg/base/io.h"
#include "zkg/channel/secure_channel.h"

namespace zkg::server {

namespace fs = std::filesystem;

namespace {

// Lets the server keep a handle on a transport whose ownership moves into
// a SecureChannel, so Stop can close it from another thread.
class SharedTransport : public channel::MessageTransport {
 public:
  explicit SharedTransport(std::shared_ptr<channel::MessageTransport> inner)
      : inner_(std::move(inner)) {}
  Status Send(ByteView m) override { return inner_->Send(m); }
  Result<Bytes> Receive() override { return inner_->Receive(); }
  void Close() override { inner_->Close(); }

 private:
  std::shared_ptr<channel::MessageTransport> inner_;
};

fs::path Resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

Result<policy::PseudonymKey> LoadPseudonymKey(const std::optional<fs::path>& path) {
  if (!path) return crypto::RandomArray<32>();
  ZKG_ASSIGN_OR_RETURN(std::string text, ReadFileText(*path));
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return FromHexFixed<32>(text);
}

uint32_t DeclaredK(const enclave::ComponentManifest& m) {
  uint32_t k = 0;
  for (const auto& d : m.declassifiers) {
    if (d.kind == policy::DeclassifierKind::kAggregateK) k = std::max(k, d.k);
  }
  return k;
}

}  // namespace

Result<ServerConfig> ServerConfig::FromJson(const nlohmann::json& j, const fs::path& base) {
  ZKG_RETURN_IF_ERROR(ExpectKeys(j, {"manifest_path", "platform_key_path", "sink_dir"},
                                 {"tcp_listen", "ws_listen", "k_min", "graph_path",
                                  "capture_dir", "pseudonym_key_path", "ready_file"},
                                 "server config"));
  ServerConfig c;
  try {
    auto opt_string = [&](const char* key) -> std::optional<std::string> {
      if (!j.contains(key) || j[key].is_null()) return std::nullopt;
      return j[key].get<std::string>();
    };
    auto opt_path = [&](const char* key) -> std::optional<fs::path> {
      auto s = opt_string(key);
      if (!s) return std::nullopt;
      return Resolve(base, *s);
    };
    c.tcp_listen = opt_string("tcp_listen");
    c.ws_listen = opt_string("ws_listen");
    if (j.contains("k_min")) c.k_min = j["k_min"].get<uint32_t>();
    c.manifest_path = Resolve(base, j["manifest_path"].get<std::string>());
    c.platform_key_path = Resolve(base, j["platform_key_path"].get<std::string>());
    c.sink_dir = Resolve(base, j["sink_dir"].get<std::string>());
    c.graph_path = opt_path("graph_path");
    c.capture_dir = opt_path("capture_dir");
    c.pseudonym_key_path = opt_path("pseudonym_key_path");
    c.ready_file = opt_path("ready_file");
  } catch (const nlohmann::json::exception& e) {
    return MakeError(Errc::kParseError, std::string("server config: ") + e.what());
  }
  if (c.k_min < 2) return MakeError(Errc::kInvalidK, "k_min must be at least 2");
  if (!c.tcp_listen && !c.ws_listen) {
    return MakeError(Errc::kInvalidArgument, "server config: no listen address");
  }
  return c;
}

Result<ServerConfig> ServerConfig::Load(const fs::path& path) {
  ZKG_ASSIGN_OR_RETURN(nlohmann::json j, ReadJsonFile(path));
  return FromJson(j, path.parent_path());
}

Result<std::vector<policy::LintFinding>> BootLint(const ServerConfig& config,
                                                  const enclave::ComponentManifest& manifest) {
  policy::ComponentGraph graph;
  if (config.graph_path) {
    ZKG_ASSIGN_OR_RETURN(policy::GraphFile file, policy::LoadGraph(*config.graph_path));
    auto it = std::find_if(file.graph.nodes.begin(), file.graph.nodes.end(), [&](const auto& n) {
      return n.component_id == manifest.component_id;
    });
    if (it == file.graph.nodes.end() || !(*it == manifest)) {
      return MakeError(Errc::kMalformedGraph,
                       "graph does not contain this server's manifest unchanged");
    }
    graph = std::move(file.graph);
  } else {
    graph.nodes.push_back(manifest);
  }
  return policy::CheckFlows(graph, policy::LintConfig{config.k_min});
}

Result<std::unique_ptr<Server>> Server::Create(const ServerConfig& config) {
  std::unique_ptr<Server> s(new Server());
  s->config_ = config;
  ZKG_ASSIGN_OR_RETURN(s->manifest_, enclave::LoadManifest(config.manifest_path));
  ZKG_ASSIGN_OR_RETURN(s->measurement_, enclave::Measure(s->manifest_));

  ZKG_ASSIGN_OR_RETURN(auto findings, BootLint(config, s->manifest_));
  if (!findings.empty()) {
    return MakeError(Errc::kLabelViolation, policy::FormatFindings(findings));
  }
  for (std::string_view sink : {kHighScoreSink, kOpsLogSink}) {
    bool declared = std::any_of(s->manifest_.egress_sinks.begin(), s->manifest_.egress_sinks.end(),
                                [&](const auto& d) { return d.sink_id == sink; });
    if (!declared) {
      return MakeError(Errc::kInvalidManifest,
                       "manifest does not declare the " + std::string(sink) + " sink");
    }
  }

  ZKG_ASSIGN_OR_RETURN(auto key, enclave::LoadPlatformKey(config.platform_key_path));
  s->platform_key_ = std::move(key);
  ZKG_ASSIGN_OR_RETURN(s->sinks_, EgressSinks::Open(config.sink_dir, s->manifest_.egress_sinks));
  if (config.capture_dir) {
    std::error_code ec;
    fs::create_directories(*config.capture_dir, ec);
    if (ec) return MakeError(Errc::kIoError, "cannot create capture dir: " + ec.message());
  }

  GameConfig game;
  // Never release with a smaller k than the manifest declares.
  game.k_min = std::max(config.k_min, DeclaredK(s->manifest_));
  ZKG_ASSIGN_OR_RETURN(game.pseudonym_key, LoadPseudonymKey(config.pseudonym_key_path));
  s->service_ = std::make_unique<GameService>(game, *s->sinks_);
  return s;
}

Server::~Server() { Stop(); }

Status Server::Start() {
  auto handler = [this](std::unique_ptr<channel::MessageTransport> t) {
    ServeConnection(std::move(t));
  };
  if (config_.tcp_listen) {
    ZKG_ASSIGN_OR_RETURN(auto ep, net::ParseEndpoint(*config_.tcp_listen));
    ZKG_ASSIGN_OR_RETURN(tcp_, net::Listener::Bind(net::Scheme::kTcp, ep, handler));
  }
  if (config_.ws_listen) {
    ZKG_ASSIGN_OR_RETURN(auto ep, net::ParseEndpoint(*config_.ws_listen));
    ZKG_ASSIGN_OR_RETURN(ws_, net::Listener::Bind(net::Scheme::kWebSocket, ep, handler));
  }
  if (config_.ready_file) {
    nlohmann::json ready = {{"tcp_port", tcp_port()},
                            {"ws_port", ws_port()},
                            {"measurement", measurement_.ToHex()}};
    fs::path tmp = config_.ready_file->string() + ".tmp";
    ZKG_RETURN_IF_ERROR(WriteFileText(tmp, ready.dump() + "\n"));
    std::error_code ec;
    fs::rename(tmp, *config_.ready_file, ec);
    if (ec) return MakeError(Errc::kIoError, "cannot write ready file: " + ec.message());
  }
  return OkStatus();
}

void Server::Stop() {
  for (auto* l : {tcp_.get(), ws_.get()}) {
    if (l) l->StopAccepting();
  }
  {
    std::lock_guard lock(live_mu_);
    stopping_ = true;
    for (auto& [id, t] : live_) t->Close();
  }
  for (auto* l : {tcp_.get(), ws_.get()}) {
    if (l) l->WaitForConnections();
  }
}

void Server::ServeConnection(std::unique_ptr<channel::MessageTransport> transport) {
  uint64_t conn_id;
  std::shared_ptr<channel::MessageTransport> shared;
  {
    std::lock_guard lock(live_mu_);
    if (stopping_) return;
    conn_id = next_conn_++;
    if (config_.capture_dir) {
      auto file = std::make_shared<std::ofstream>(
          *config_.capture_dir / ("conn-" + std::to_string(conn_id) + ".session.bin"),
          std::ios::binary);
      transport = std::make_unique<channel::CapturingTransport>(
          std::move(transport), [file](ByteView bytes) {
            file->write(reinterpret_cast<const char*>(bytes.data()),
                        static_cast<std::streamsize>(bytes.size()));
            file->flush();
          });
    }
    shared = std::shared_ptr<channel::MessageTransport>(std::move(transport));
    live_[conn_id] = shared;
  }

  auto accepted = channel::SecureChannel::Accept(std::make_unique<SharedTransport>(shared),
                                                 measurement_, *platform_key_);
  if (accepted.ok()) {
    std::shared_ptr<channel::SecureChannel> ch = std::move(*accepted);
    SessionId session =
        service_->OpenSession([ch](const Bytes& msg) { (void)ch->Send(msg); });
    for (;;) {
      auto msg = ch->Receive();
      if (!msg.ok()) break;
      service_->HandleMessage(session, *msg);
    }
    service_->CloseSession(session);
    ch->Close();
  } else {
    shared->Close();
  }

  std::lock_guard lock(live_mu_);
  live_.erase(conn_id);
}

}  // namespace zkg::server

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

// zkg: operator and auditor command line.
//
// Exit codes: 0 success or clean, 1 findings, 2 usage or I/O error,
// 3 attestation failure.

#include <csignal>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <pthread.h>

#include "CLI11.hpp"
#include "zkg/audit/bot.h"
#include "zkg/audit/scan.h"
#include "zkg/base/crypto.h"
#include "zkg/base/io.h"
#include "zkg/enclave/attestation.h"
#include "zkg/enclave/manifest.h"
#include "zkg/policy/audit.h"
#include "zkg/policy/lint.h"
#include "zkg/server/server.h"

namespace zkg::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAttestation = 3;

int Fail(const Error& e) {
  std::cerr << "error: " << e.ToString() << "\n";
  switch (e.root()) {
    case Errc::kHandshakeAborted:
    case Errc::kUnknownPlatformKey:
    case Errc::kBadSignature:
    case Errc::kUnknownMeasurement:
    case Errc::kReportMismatch:
      return kExitAttestation;
    default:
      return e.code == Errc::kHandshakeAborted ? kExitAttestation : kExitUsage;
  }
}

int Measure(const std::string& path) {
  auto m = enclave::LoadManifest(path);
  if (!m.ok()) return Fail(m.error());
  auto measurement = enclave::Measure(*m);
  if (!measurement.ok()) return Fail(measurement.error());
  std::cout << measurement->ToHex() << "\n";
  return kExitOk;
}

int Lint(const std::string& path, std::optional<uint32_t> k_min) {
  auto g = policy::LoadGraph(path);
  if (!g.ok()) return Fail(g.error());
  if (k_min) g->config.k_min = *k_min;
  auto findings = policy::CheckFlows(g->graph, g->config);
  if (!findings.ok()) return Fail(findings.error());
  std::cout << policy::FormatFindings(*findings);
  return findings->empty() ? kExitOk : kExitFindings;
}

struct BotArgs {
  std::string server;
  std::string trust_store;
  std::string script;
  std::string identity_a = "bot-a";
  std::string identity_b = "bot-b";
  std::string canary_tag;
  std::string transcript;
  bool query_highscores = false;
};

void PrintHighScores(const app::HighScoreReply& reply) {
  if (!reply.report) {
    std::cout << "highscores withheld\n";
    return;
  }
  for (const auto& e : reply.report->entries) {
    std::cout << "highscore " << e.pseudonym.ToHex() << " " << e.total << "\n";
  }
}

int Bot(const BotArgs& args) {
  audit::BotOptions opt;
  auto addr = net::ParseAddress(args.server);
  if (!addr.ok()) return Fail(addr.error());
  opt.address = *addr;
  auto store = enclave::TrustStore::Load(args.trust_store);
  if (!store.ok()) return Fail(store.error());
  opt.trust_store = *store;
  auto script = audit::BotScript::Parse(args.script);
  if (!script.ok()) return Fail(script.error());
  opt.identities = {args.identity_a, args.identity_b};
  if (!args.canary_tag.empty()) {
    auto tag = FromHexFixed<8>(args.canary_tag);
    if (!tag.ok()) return Fail(tag.error());
    opt.canary = *tag;
  }
  opt.query_highscores = args.query_highscores;

  auto result = audit::RunBotMatch(opt, *script);
  if (!result.ok()) return Fail(result.error());
  if (!args.transcript.empty()) {
    auto st = WriteFileText(args.transcript, audit::FormatTranscript(result->transcript));
    if (!st.ok()) return Fail(st.error());
  }
  const auto& s = result->final_state;
  std::cout << "match " << result->match_id << " winner "
            << shufflepuck::SlotName(*s.winner) << " score " << s.scores[0] << "-"
            << s.scores[1] << " shots " << s.shots_played << "\n";
  if (result->high_scores) PrintHighScores(*result->high_scores);
  return kExitOk;
}

int HighScores(const std::string& server, const std::string& trust_store,
               const std::string& identity) {
  auto addr = net::ParseAddress(server);
  if (!addr.ok()) return Fail(addr.error());
  auto store = enclave::TrustStore::Load(trust_store);
  if (!store.ok()) return Fail(store.error());
  auto reply = audit::QueryHighScores(*addr, *store, identity);
  if (!reply.ok()) return Fail(reply.error());
  PrintHighScores(*reply);
  return kExitOk;
}

int CanaryScan(const std::string& dir, const std::string& canary_file) {
  auto canaries = audit::LoadCanaryFile(canary_file);
  if (!canaries.ok()) return Fail(canaries.error());
  auto hits = audit::ScanForCanaries(dir, *canaries);
  if (!hits.ok()) return Fail(hits.error());
  std::cout << audit::FormatHits(*hits);
  return hits->empty() ? kExitOk : kExitFindings;
}

int VerifyAudit(const std::string& chain_path, const std::string& sink_dir) {
  auto chain = policy::AuditChain::Load(chain_path);
  if (!chain.ok()) return Fail(chain.error());
  if (auto bad = policy::VerifyChain(*chain)) {
    std::cout << "first bad record: " << *bad << "\n";
    return kExitFindings;
  }
  if (!sink_dir.empty()) {
    if (auto st = audit::CheckSinkCoverage(sink_dir); !st.ok()) {
      std::cout << "coverage: " << st.error().message << "\n";
      return kExitFindings;
    }
  }
  std::cout << "ok " << chain->records().size() << " records\n";
  return kExitOk;
}

struct ServeArgs {
  std::string config;
  std::string sink_dir;
  std::string capture_dir;
  std::string ready_file;
};

int Serve(const ServeArgs& args) {
#ifdef ZKG_LEAKY_TEST_BUILD
  std::cerr << "WARNING: leaky test build; persists raw player data on purpose\n";
#endif
  auto config = server::ServerConfig::Load(args.config);
  if (!config.ok()) return Fail(config.error());
  if (!args.sink_dir.empty()) config->sink_dir = args.sink_dir;
  if (!args.capture_dir.empty()) config->capture_dir = args.capture_dir;
  if (!args.ready_file.empty()) config->ready_file = args.ready_file;

  auto srv = server::Server::Create(*config);
  if (!srv.ok()) {
    if (srv.code() == Errc::kLabelViolation) {
      std::cerr << "refusing to start: manifest flows fail lint\n" << srv.error().message;
      return kExitFindings;
    }
    return Fail(srv.error());
  }

  // Block the shutdown signals before any server thread exists so only
  // sigwait below sees them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  if (auto st = (*srv)->Start(); !st.ok()) return Fail(st.error());
  std::cout << "measurement " << (*srv)->measurement().ToHex() << "\n"
            << "tcp " << (*srv)->tcp_port() << " ws " << (*srv)->ws_port() << "\n"
            << std::flush;
  int sig = 0;
  sigwait(&signals, &sig);
  (*srv)->Stop();
  return kExitOk;
}

int Keygen(const std::string& key_id, const std::string& out) {
  auto key = enclave::PlatformKey::Generate(key_id);
  auto st = WriteFileText(out, enclave::PlatformKeyToJson(key).dump(2) + "\n");
  if (!st.ok()) return Fail(st.error());
  std::cout << ToHex(key.signing_key.public_key()) << "\n";
  return kExitOk;
}

int MakeTrustStore(const std::vector<std::string>& platform_keys,
                   const std::vector<std::string>& manifests, const std::string& out) {
  enclave::TrustStore store;
  for (const auto& path : platform_keys) {
    auto key = enclave::LoadPlatformKey(path);
    if (!key.ok()) return Fail(key.error());
    store.AddPlatformKey(key->key_id, key->signing_key.public_key());
  }
  for (const auto& path : manifests) {
    auto m = enclave::LoadManifest(path);
    if (!m.ok()) return Fail(m.error());
    auto measurement = enclave::Measure(*m);
    if (!measurement.ok()) return Fail(measurement.error());
    store.AddExpectedMeasurement(*measurement);
  }
  auto st = WriteFileText(out, store.Serialize());
  if (!st.ok()) return Fail(st.error());
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"zkgame audit and operations tool"};
  app.require_subcommand(1);
  int rc = kExitOk;

  std::string path;
  auto* measure = app.add_subcommand("measure", "Print a manifest's measurement");
  measure->add_option("manifest", path, "Manifest JSON")->required();
  measure->callback([&] { rc = Measure(path); });

  std::optional<uint32_t> k_min;
  auto* lint = app.add_subcommand("lint", "Lint a component graph");
  lint->add_option("graph", path, "Graph JSON")->required();
  lint->add_option("--k-min", k_min, "Override the graph's k_min");
  lint->callback([&] { rc = Lint(path, k_min); });

  BotArgs bot_args;
  auto* bot = app.add_subcommand("bot", "Play one match as two attested bot players");
  bot->add_option("--server", bot_args.server, "tcp://host:port or ws://host:port/")->required();
  bot->add_option("--trust-store", bot_args.trust_store, "Trust store JSON")->required();
  bot->add_option("--script", bot_args.script, "Turns JSON file or random:<seed>")->required();
  bot->add_option("--identity-a", bot_args.identity_a, "Identity of the creating bot");
  bot->add_option("--identity-b", bot_args.identity_b, "Identity of the joining bot");
  bot->add_option("--canary-tag", bot_args.canary_tag, "16 hex chars prefixed to every input");
  bot->add_option("--transcript", bot_args.transcript, "Write plaintext app messages here");
  bot->add_flag("--query-highscores", bot_args.query_highscores, "Ask for high scores at the end");
  bot->callback([&] { rc = Bot(bot_args); });

  std::string server_addr, trust_store, identity = "observer";
  auto* hs = app.add_subcommand("highscores", "Log in once and print the high-score table");
  hs->add_option("--server", server_addr, "Server address")->required();
  hs->add_option("--trust-store", trust_store, "Trust store JSON")->required();
  hs->add_option("--identity", identity, "Identity to log in with");
  hs->callback([&] { rc = HighScores(server_addr, trust_store, identity); });

  std::string dir, canary_file;
  auto* scan = app.add_subcommand("canary-scan", "Search server output for canary bytes");
  scan->add_option("capture_dir", dir, "Directory to scan")->required();
  scan->add_option("canaries", canary_file, "Canary list")->required();
  scan->callback([&] { rc = CanaryScan(dir, canary_file); });

  std::string sink_dir;
  auto* verify = app.add_subcommand("verify-audit", "Verify an audit chain file");
  verify->add_option("chain", path, "Audit chain file")->required();
  verify->add_option("--sink-dir", sink_dir, "Also match sink writes to records");
  verify->callback([&] { rc = VerifyAudit(path, sink_dir); });

  ServeArgs serve_args;
  auto* serve = app.add_subcommand("serve", "Run the game server");
  serve->add_option("--config", serve_args.config, "Server config JSON")->required();
  serve->add_option("--sink-dir", serve_args.sink_dir, "Override sink_dir");
  serve->add_option("--capture-dir", serve_args.capture_dir, "Override capture_dir");
  serve->add_option("--ready-file", serve_args.ready_file, "Override ready_file");
  serve->callback([&] { rc = Serve(serve_args); });

  std::string key_id, out;
  auto* keygen = app.add_subcommand("keygen", "Generate a platform signing key");
  keygen->add_option("--key-id", key_id, "Key id")->required();
  keygen->add_option("--out", out, "Output JSON")->required();
  keygen->callback([&] { rc = Keygen(key_id, out); });

  std::vector<std::string> keys, manifests;
  auto* ts = app.add_subcommand("trust-store", "Build a trust store");
  ts->add_option("--platform-key", keys, "Platform key JSON")->required();
  ts->add_option("--manifest", manifests, "Expected manifest")->required();
  ts->add_option("--out", out, "Output JSON")->required();
  ts->callback([&] { rc = MakeTrustStore(keys, manifests, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return rc;
}

}  // namespace
}  // namespace zkg::cli

int main(int argc, char** argv) { return zkg::cli::Main(argc, argv); }

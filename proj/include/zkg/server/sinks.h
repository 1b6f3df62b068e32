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

#ifndef ZKG_SERVER_SINKS_H_
#define ZKG_SERVER_SINKS_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "zkg/base/bytes.h"
#include "zkg/base/result.h"
#include "zkg/policy/audit.h"
#include "zkg/policy/labels.h"

namespace zkg::server {

inline constexpr std::string_view kAuditChainFile = "audit.chain";
inline constexpr std::string_view kSinkFileSuffix = ".sink";

// The only path from the service to the outside world other than a
// player's own sealed channel. Each declared sink is an append-only file of
// [u32 LE length][payload] records; every write is first recorded in the
// audit chain, which is rewritten in full after each append.
class EgressSinks {
 public:
  static Result<std::unique_ptr<EgressSinks>> Open(
      const std::filesystem::path& dir, const std::vector<policy::SinkDecl>& sinks);

  // kLabelViolation when the sink is undeclared or `label` is above the
  // sink's declared label.
  Status Write(std::string_view sink_id, policy::DataLabel label, ByteView payload);

  policy::AuditChain chain_snapshot() const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  using SinkMap = std::map<std::string, policy::SinkDecl, std::less<>>;

  EgressSinks(std::filesystem::path dir, SinkMap sinks)
      : dir_(std::move(dir)), sinks_(std::move(sinks)) {}

  const std::filesystem::path dir_;
  const SinkMap sinks_;
  mutable std::mutex mu_;
  policy::AuditChain chain_;
};

std::filesystem::path SinkFilePath(const std::filesystem::path& dir,
                                   std::string_view sink_id);

// Splits a sink file back into its payloads.
Result<std::vector<Bytes>> ReadSinkFile(const std::filesystem::path& path);

}  // namespace zkg::server

#endif  // ZKG_SERVER_SINKS_H_

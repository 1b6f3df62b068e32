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

#include "zkg/server/sinks.h"

#include <fstream>

#include "zkg/base/io.h"

namespace zkg::server {

namespace fs = std::filesystem;

fs::path SinkFilePath(const fs::path& dir, std::string_view sink_id) {
  return dir / (std::string(sink_id) + std::string(kSinkFileSuffix));
}

Result<std::unique_ptr<EgressSinks>> EgressSinks::Open(
    const fs::path& dir, const std::vector<policy::SinkDecl>& sinks) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return MakeError(Errc::kIoError, "cannot create " + dir.string() + ": " + ec.message());
  SinkMap by_id;
  for (const auto& s : sinks) {
    by_id[s.sink_id] = s;
    // Touch the file so an idle sink still shows up in captures.
    std::ofstream touch(SinkFilePath(dir, s.sink_id), std::ios::binary | std::ios::app);
    if (!touch) return MakeError(Errc::kIoError, "cannot open sink " + s.sink_id);
  }
  auto out = std::unique_ptr<EgressSinks>(new EgressSinks(dir, std::move(by_id)));
  ZKG_RETURN_IF_ERROR(WriteFileBytes(dir / kAuditChainFile, out->chain_.Serialize()));
  return out;
}

Status EgressSinks::Write(std::string_view sink_id, policy::DataLabel label,
                          ByteView payload) {
  auto it = sinks_.find(sink_id);
  if (it == sinks_.end()) {
    return MakeError(Errc::kLabelViolation, "undeclared sink " + std::string(sink_id));
  }
  if (!policy::label_leq(label, it->second.label)) {
    return MakeError(Errc::kLabelViolation,
                     std::string(policy::LabelName(label)) + " data refused by sink " +
                         it->second.sink_id);
  }
  if (payload.size() > UINT32_MAX) return MakeError(Errc::kInvalidArgument, "payload too large");

  std::lock_guard lock(mu_);
  chain_.Append(sink_id, label, payload);
  const fs::path chain_path = dir_ / kAuditChainFile;
  const fs::path tmp = dir_ / (std::string(kAuditChainFile) + ".tmp");
  ZKG_RETURN_IF_ERROR(WriteFileBytes(tmp, chain_.Serialize()));
  std::error_code ec;
  fs::rename(tmp, chain_path, ec);
  if (ec) return MakeError(Errc::kIoError, "cannot replace audit chain: " + ec.message());

  ByteWriter record;
  record.Prefixed(payload);
  std::ofstream out(SinkFilePath(dir_, sink_id), std::ios::binary | std::ios::app);
  const Bytes& b = record.bytes();
  out.write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size()));
  out.flush();
  if (!out) return MakeError(Errc::kIoError, "sink write failed: " + std::string(sink_id));
  return OkStatus();
}

policy::AuditChain EgressSinks::chain_snapshot() const {
  std::lock_guard lock(mu_);
  return chain_;
}

Result<std::vector<Bytes>> ReadSinkFile(const fs::path& path) {
  ZKG_ASSIGN_OR_RETURN(Bytes data, ReadFileBytes(path));
  ByteReader r(data);
  std::vector<Bytes> out;
  while (!r.empty()) {
    ZKG_ASSIGN_OR_RETURN(ByteView payload, r.Prefixed());
    out.emplace_back(payload.begin(), payload.end());
  }
  return out;
}

}  // namespace zkg::server

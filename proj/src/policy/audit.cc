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

#include "zkg/policy/audit.h"

#include <chrono>

#include "zkg/base/crypto.h"
#include "zkg/base/io.h"

namespace zkg::policy {

Bytes AuditRecord::Encode() const {
  ByteWriter w;
  w.U64(index)
      .I64(timestamp_ms)
      .Prefixed(sink_id)
      .U8(static_cast<uint8_t>(label))
      .Raw(payload_digest)
      .Raw(prev_hash);
  return std::move(w).Take();
}

Result<AuditRecord> AuditRecord::Decode(ByteView bytes) {
  ByteReader r(bytes);
  AuditRecord rec;
  ZKG_ASSIGN_OR_RETURN(rec.index, r.U64());
  ZKG_ASSIGN_OR_RETURN(rec.timestamp_ms, r.I64());
  ZKG_ASSIGN_OR_RETURN(ByteView sink, r.Prefixed());
  rec.sink_id.assign(sink.begin(), sink.end());
  ZKG_ASSIGN_OR_RETURN(uint8_t label, r.U8());
  auto parsed = LabelFromByte(label);
  if (!parsed) return MakeError(Errc::kParseError, "invalid label byte in audit record");
  rec.label = *parsed;
  ZKG_ASSIGN_OR_RETURN(rec.payload_digest, r.Fixed<32>());
  ZKG_ASSIGN_OR_RETURN(rec.prev_hash, r.Fixed<32>());
  ZKG_RETURN_IF_ERROR(r.ExpectEnd());
  return rec;
}

Digest AuditRecord::Hash() const { return crypto::Sha256(Encode()); }

int64_t NowUnixMillis() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

const AuditRecord& AuditChain::Append(std::string_view sink_id, DataLabel label,
                                      ByteView payload, int64_t timestamp_ms) {
  AuditRecord rec;
  rec.index = records_.size();
  rec.timestamp_ms = timestamp_ms;
  rec.sink_id = std::string(sink_id);
  rec.label = label;
  rec.payload_digest = crypto::Sha256(payload);
  rec.prev_hash = records_.empty() ? Digest{} : records_.back().Hash();
  records_.push_back(std::move(rec));
  head_hash_ = records_.back().Hash();
  return records_.back();
}

const AuditRecord& AuditChain::Append(std::string_view sink_id, DataLabel label,
                                      ByteView payload) {
  return Append(sink_id, label, payload, NowUnixMillis());
}

Bytes AuditChain::Serialize() const {
  ByteWriter w;
  for (const auto& rec : records_) w.Prefixed(rec.Encode());
  w.Raw(head_hash_);
  return std::move(w).Take();
}

Result<AuditChain> AuditChain::Parse(ByteView file_bytes) {
  if (file_bytes.size() < 32) {
    return MakeError(Errc::kTruncated, "audit file shorter than its footer");
  }
  AuditChain chain;
  ByteReader r(file_bytes.first(file_bytes.size() - 32));
  while (!r.empty()) {
    auto body = r.Prefixed();
    if (!body.ok()) {
      return MakeError(Errc::kTruncated,
                       "record " + std::to_string(chain.records_.size()) + " is truncated");
    }
    auto rec = AuditRecord::Decode(*body);
    if (!rec.ok()) {
      return MakeError(Errc::kParseError, "record " + std::to_string(chain.records_.size()) +
                                              ": " + rec.error().message);
    }
    chain.records_.push_back(std::move(*rec));
  }
  std::copy(file_bytes.end() - 32, file_bytes.end(), chain.head_hash_.begin());
  return chain;
}

Result<AuditChain> AuditChain::Load(const std::filesystem::path& path) {
  ZKG_ASSIGN_OR_RETURN(Bytes data, ReadFileBytes(path));
  return Parse(data);
}

std::optional<uint64_t> VerifyChain(const AuditChain& chain) {
  const auto& records = chain.records();
  Digest expected_prev{};
  for (size_t i = 0; i < records.size(); ++i) {
    if (records[i].index != i || records[i].prev_hash != expected_prev) {
      return i;
    }
    expected_prev = records[i].Hash();
  }
  // For an empty chain the footer is the all-zero link.
  if (chain.head_hash() != expected_prev) {
    return records.size();
  }
  return std::nullopt;
}

}  // namespace zkg::policy

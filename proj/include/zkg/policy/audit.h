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

#ifndef ZKG_POLICY_AUDIT_H_
#define ZKG_POLICY_AUDIT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "zkg/base/bytes.h"
#include "zkg/base/result.h"
#include "zkg/policy/labels.h"

namespace zkg::policy {

// One egress event. Record i links to record i-1 through prev_hash =
// SHA-256(Encode(record i-1)); record 0 links to 32 zero bytes.
struct AuditRecord {
  uint64_t index = 0;
  int64_t timestamp_ms = 0;
  std::string sink_id;
  DataLabel label = DataLabel::kPublic;
  Digest payload_digest{};
  Digest prev_hash{};

  // index u64 | timestamp i64 | sink_id (u32-prefixed) | label u8 |
  // payload_digest[32] | prev_hash[32]
  Bytes Encode() const;
  static Result<AuditRecord> Decode(ByteView bytes);
  Digest Hash() const;

  friend bool operator==(const AuditRecord&, const AuditRecord&) = default;
};

// Append-only hash chain over AuditRecords. Single writer; a copy is a
// consistent snapshot that can be verified concurrently.
class AuditChain {
 public:
  AuditChain() = default;

  const AuditRecord& Append(std::string_view sink_id, DataLabel label, ByteView payload,
                            int64_t timestamp_ms);
  // Uses the system clock.
  const AuditRecord& Append(std::string_view sink_id, DataLabel label, ByteView payload);

  const std::vector<AuditRecord>& records() const { return records_; }
  std::vector<AuditRecord>& mutable_records_for_testing() { return records_; }
  const Digest& head_hash() const { return head_hash_; }
  void set_head_hash_for_testing(const Digest& h) { head_hash_ = h; }

  // Each record as [u32 LE length][encoding], then the 32-byte head hash.
  Bytes Serialize() const;
  // Structural parse only; links are checked by VerifyChain.
  static Result<AuditChain> Parse(ByteView file_bytes);
  static Result<AuditChain> Load(const std::filesystem::path& path);

 private:
  std::vector<AuditRecord> records_;
  Digest head_hash_{};
};

// nullopt when every link holds; otherwise the first bad index. A record
// whose index or prev_hash is wrong reports its own index; a head hash that
// does not match the last record reports records().size().
std::optional<uint64_t> VerifyChain(const AuditChain& chain);

int64_t NowUnixMillis();

}  // namespace zkg::policy

#endif  // ZKG_POLICY_AUDIT_H_

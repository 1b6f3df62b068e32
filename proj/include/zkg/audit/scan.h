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

// Post-run checks over a server's output directory: raw-input canaries in
// any byte that left the server for a third party or for disk, and
// one-to-one coverage of sink writes by audit records.

#ifndef ZKG_AUDIT_SCAN_H_
#define ZKG_AUDIT_SCAN_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "zkg/base/bytes.h"
#include "zkg/base/result.h"

namespace zkg::audit {

// Socket captures end in this suffix. They hold ciphertext addressed to the
// owning session, which may legitimately echo that session's own inputs.
inline constexpr std::string_view kSessionCaptureSuffix = ".session.bin";

struct Canary {
  std::string name;  // the line as written in the canary file
  Bytes bytes;
};

// One canary per line: literal text, or "hex:" followed by hex bytes.
// Blank lines and lines starting with '#' are skipped.
Result<std::vector<Canary>> ParseCanaries(std::string_view text);
Result<std::vector<Canary>> LoadCanaryFile(const std::filesystem::path& path);

struct CanaryHit {
  std::filesystem::path file;
  uint64_t offset = 0;
  std::string canary;
  friend bool operator==(const CanaryHit&, const CanaryHit&) = default;
};

// Every occurrence of every canary in every regular file under `dir`
// (recursively, in path order), skipping session captures.
Result<std::vector<CanaryHit>> ScanForCanaries(const std::filesystem::path& dir,
                                               const std::vector<Canary>& canaries);

// file<TAB>offset<TAB>canary per line.
std::string FormatHits(const std::vector<CanaryHit>& hits);

// Checks a sink directory written by the server: the audit chain verifies,
// and the (sink_id, SHA-256(payload)) pairs of all sink files match the
// chain's records one to one.
Status CheckSinkCoverage(const std::filesystem::path& sink_dir);

}  // namespace zkg::audit

#endif  // ZKG_AUDIT_SCAN_H_

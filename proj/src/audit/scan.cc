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

#include "zkg/audit/scan.h"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "zkg/base/crypto.h"
#include "zkg/base/io.h"
#include "zkg/policy/audit.h"
#include "zkg/server/sinks.h"

namespace zkg::audit {

namespace fs = std::filesystem;

Result<std::vector<Canary>> ParseCanaries(std::string_view text) {
  std::vector<Canary> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    Canary c;
    c.name = line;
    if (line.rfind("hex:", 0) == 0) {
      ZKG_ASSIGN_OR_RETURN(c.bytes, FromHex(line.substr(4)));
      if (c.bytes.empty()) return MakeError(Errc::kParseError, "empty hex canary");
    } else {
      c.bytes = ToBytes(line);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Result<std::vector<Canary>> LoadCanaryFile(const fs::path& path) {
  ZKG_ASSIGN_OR_RETURN(std::string text, ReadFileText(path));
  return ParseCanaries(text);
}

Result<std::vector<CanaryHit>> ScanForCanaries(const fs::path& dir,
                                               const std::vector<Canary>& canaries) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    return MakeError(Errc::kIoError, "not a directory: " + dir.string());
  }
  std::vector<fs::path> files;
  for (auto it = fs::recursive_directory_iterator(dir, ec); !ec && it != fs::end(it);
       it.increment(ec)) {
    if (!it->is_regular_file()) continue;
    const std::string name = it->path().filename().string();
    if (name.size() >= kSessionCaptureSuffix.size() &&
        name.compare(name.size() - kSessionCaptureSuffix.size(), kSessionCaptureSuffix.size(),
                     kSessionCaptureSuffix) == 0) {
      continue;
    }
    files.push_back(it->path());
  }
  if (ec) return MakeError(Errc::kIoError, "cannot walk " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());

  std::vector<CanaryHit> hits;
  for (const auto& file : files) {
    ZKG_ASSIGN_OR_RETURN(Bytes data, ReadFileBytes(file));
    for (const auto& c : canaries) {
      std::boyer_moore_horspool_searcher search(c.bytes.begin(), c.bytes.end());
      for (auto pos = data.begin();;) {
        auto found = std::search(pos, data.end(), search);
        if (found == data.end()) break;
        hits.push_back({file, static_cast<uint64_t>(found - data.begin()), c.name});
        pos = found + 1;
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const CanaryHit& a, const CanaryHit& b) {
    return std::tie(a.file, a.offset, a.canary) < std::tie(b.file, b.offset, b.canary);
  });
  return hits;
}

std::string FormatHits(const std::vector<CanaryHit>& hits) {
  std::string out;
  for (const auto& h : hits) {
    out += h.file.string() + "\t" + std::to_string(h.offset) + "\t" + h.canary + "\n";
  }
  return out;
}

Status CheckSinkCoverage(const fs::path& sink_dir) {
  ZKG_ASSIGN_OR_RETURN(policy::AuditChain chain,
                       policy::AuditChain::Load(sink_dir / server::kAuditChainFile));
  if (auto bad = policy::VerifyChain(chain)) {
    return MakeError(Errc::kParseError, "audit chain breaks at record " + std::to_string(*bad));
  }
  std::map<std::pair<std::string, Digest>, int64_t> balance;
  for (const auto& r : chain.records()) ++balance[{r.sink_id, r.payload_digest}];

  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(sink_dir, ec)) {
    const fs::path& p = entry.path();
    if (p.extension() != server::kSinkFileSuffix) continue;
    ZKG_ASSIGN_OR_RETURN(auto payloads, server::ReadSinkFile(p));
    for (const auto& payload : payloads) --balance[{p.stem().string(), crypto::Sha256(payload)}];
  }
  if (ec) return MakeError(Errc::kIoError, "cannot list " + sink_dir.string());
  for (const auto& [key, n] : balance) {
    if (n > 0) {
      return MakeError(Errc::kParseError,
                       "audit record without a matching write to " + key.first);
    }
    if (n < 0) {
      return MakeError(Errc::kParseError, "write to " + key.first + " without an audit record");
    }
  }
  return OkStatus();
}

}  // namespace zkg::audit

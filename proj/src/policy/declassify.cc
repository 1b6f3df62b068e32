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

#include "zkg/policy/declassify.h"

#include <algorithm>
#include <limits>
#include <map>

#include "zkg/base/crypto.h"

namespace zkg::policy {

Result<Pseudonym> Pseudonymize(ByteView identity, const PseudonymKey& key) {
  if (identity.empty()) {
    return MakeError(Errc::kEmptyIdentity, "identity must be non-empty");
  }
  return Pseudonym{crypto::HmacSha256(key, identity)};
}

namespace {

int64_t SaturatingAdd(int64_t a, int64_t b) {
  int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    return b > 0 ? std::numeric_limits<int64_t>::max()
                 : std::numeric_limits<int64_t>::min();
  }
  return out;
}

}  // namespace

Result<AggregateResult> AggregateK(const std::vector<ScoreRow>& rows, uint32_t k,
                                   uint32_t top_n) {
  if (k < 2) {
    return MakeError(Errc::kInvalidK, "k must be at least 2");
  }
  std::map<Pseudonym, int64_t> totals;
  for (const auto& row : rows) {
    auto [it, inserted] = totals.try_emplace(row.pseudonym, 0);
    it->second = SaturatingAdd(it->second, row.score);
  }
  if (totals.size() < k) {
    return AggregateResult{Withheld{}};
  }
  std::vector<LeaderboardEntry> entries;
  entries.reserve(totals.size());
  for (const auto& [p, total] : totals) entries.push_back({p, total});
  auto by_rank = [](const LeaderboardEntry& a, const LeaderboardEntry& b) {
    if (a.total != b.total) return a.total > b.total;
    return a.pseudonym < b.pseudonym;
  };
  size_t n = std::min<size_t>(top_n, entries.size());
  std::partial_sort(entries.begin(), entries.begin() + static_cast<ptrdiff_t>(n),
                    entries.end(), by_rank);
  entries.resize(n);
  return AggregateResult{AggregateReport{std::move(entries)}};
}

}  // namespace zkg::policy

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

#ifndef ZKG_POLICY_DECLASSIFY_H_
#define ZKG_POLICY_DECLASSIFY_H_

#include <compare>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "zkg/base/bytes.h"
#include "zkg/base/result.h"

namespace zkg::policy {

inline constexpr uint32_t kDefaultKMin = 5;

using PseudonymKey = std::array<uint8_t, 32>;

struct Pseudonym {
  Digest bytes{};

  std::string ToHex() const { return zkg::ToHex(bytes); }
  friend auto operator<=>(const Pseudonym&, const Pseudonym&) = default;
};

// HMAC-SHA256(pseudonym_key, identity). Deterministic per key, unlinkable
// across keys. kEmptyIdentity for an empty identity.
Result<Pseudonym> Pseudonymize(ByteView identity, const PseudonymKey& key);

struct ScoreRow {
  Pseudonym pseudonym;
  int64_t score = 0;
};

struct LeaderboardEntry {
  Pseudonym pseudonym;
  int64_t total = 0;

  friend bool operator==(const LeaderboardEntry&, const LeaderboardEntry&) = default;
};

struct AggregateReport {
  std::vector<LeaderboardEntry> entries;

  friend bool operator==(const AggregateReport&, const AggregateReport&) = default;
};

// Released instead of a report when fewer than k participants contributed.
// Deliberately carries no participant count.
struct Withheld {
  friend bool operator==(const Withheld&, const Withheld&) = default;
};

using AggregateResult = std::variant<AggregateReport, Withheld>;

// Sums scores per pseudonym. Withheld when the number of distinct
// pseudonyms is below k; otherwise the top_n totals ordered by score
// descending, then pseudonym bytes ascending. kInvalidK when k < 2.
// Sums saturate at the int64 range.
Result<AggregateResult> AggregateK(const std::vector<ScoreRow>& rows, uint32_t k,
                                   uint32_t top_n);

}  // namespace zkg::policy

#endif  // ZKG_POLICY_DECLASSIFY_H_

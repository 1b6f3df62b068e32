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

#ifndef ZKG_SHUFFLEPUCK_MATCH_H_
#define ZKG_SHUFFLEPUCK_MATCH_H_

#include <array>
#include <cstdint>
#include <optional>

#include "zkg/base/bytes.h"
#include "zkg/base/result.h"
#include "zkg/shufflepuck/physics.h"

namespace zkg::shufflepuck {

inline constexpr uint32_t kWinningScore = 7;

enum class Slot : uint8_t { kA = 0, kB = 1 };

constexpr Slot Other(Slot s) { return s == Slot::kA ? Slot::kB : Slot::kA; }
constexpr char SlotName(Slot s) { return s == Slot::kA ? 'A' : 'B'; }

enum class Phase : uint8_t {
  kAwaitDefense = 0,
  kAwaitShot = 1,
  kFinished = 2,
};

// Turn structure: the defender commits a paddle position, then the shooter
// shoots; the outcome is scored for the shooter and the roles swap.
struct MatchState {
  std::array<uint32_t, 2> scores{0, 0};
  Slot shooter = Slot::kA;
  Phase phase = Phase::kAwaitDefense;
  std::optional<Slot> winner;
  uint32_t shots_played = 0;

  Slot defender() const { return Other(shooter); }

  // score_a u32 | score_b u32 | shooter u8 | phase u8 | winner u8 (0xff none) |
  // shots_played u32
  Bytes Encode() const;
  static Result<MatchState> Read(ByteReader& reader);

  friend bool operator==(const MatchState&, const MatchState&) = default;
};

MatchState NewMatch(Slot first_shooter);

// AwaitDefense -> AwaitShot.
Result<MatchState> CommitDefense(const MatchState& state);

// AwaitShot -> AwaitDefense with roles swapped, or Finished once a score
// reaches kWinningScore. Only kScored outcomes award points.
Result<MatchState> ApplyOutcome(const MatchState& state, const ShotOutcome& outcome);

}  // namespace zkg::shufflepuck

#endif  // ZKG_SHUFFLEPUCK_MATCH_H_

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

#include "zkg/shufflepuck/match.h"

namespace zkg::shufflepuck {

Bytes MatchState::Encode() const {
  ByteWriter w;
  w.U32(scores[0])
      .U32(scores[1])
      .U8(static_cast<uint8_t>(shooter))
      .U8(static_cast<uint8_t>(phase))
      .U8(winner ? static_cast<uint8_t>(*winner) : 0xff)
      .U32(shots_played);
  return std::move(w).Take();
}

Result<MatchState> MatchState::Read(ByteReader& reader) {
  MatchState s;
  ZKG_ASSIGN_OR_RETURN(s.scores[0], reader.U32());
  ZKG_ASSIGN_OR_RETURN(s.scores[1], reader.U32());
  ZKG_ASSIGN_OR_RETURN(uint8_t shooter, reader.U8());
  ZKG_ASSIGN_OR_RETURN(uint8_t phase, reader.U8());
  ZKG_ASSIGN_OR_RETURN(uint8_t winner, reader.U8());
  ZKG_ASSIGN_OR_RETURN(s.shots_played, reader.U32());
  if (shooter > 1 || phase > 2 || (winner > 1 && winner != 0xff) ||
      ((phase == 2) != (winner != 0xff))) {
    return MakeError(Errc::kParseError, "invalid match state");
  }
  s.shooter = static_cast<Slot>(shooter);
  s.phase = static_cast<Phase>(phase);
  if (winner != 0xff) s.winner = static_cast<Slot>(winner);
  return s;
}

MatchState NewMatch(Slot first_shooter) {
  MatchState s;
  s.shooter = first_shooter;
  return s;
}

Result<MatchState> CommitDefense(const MatchState& state) {
  if (state.phase != Phase::kAwaitDefense) {
    return MakeError(Errc::kWrongPhase, "not awaiting a defense");
  }
  MatchState next = state;
  next.phase = Phase::kAwaitShot;
  return next;
}

Result<MatchState> ApplyOutcome(const MatchState& state, const ShotOutcome& outcome) {
  if (state.phase != Phase::kAwaitShot) {
    return MakeError(Errc::kWrongPhase, "not awaiting a shot");
  }
  MatchState next = state;
  const auto shooter = static_cast<size_t>(state.shooter);
  if (outcome.kind == OutcomeKind::kScored) next.scores[shooter] += outcome.points;
  ++next.shots_played;
  if (next.scores[shooter] >= kWinningScore) {
    next.phase = Phase::kFinished;
    next.winner = state.shooter;
    return next;
  }
  next.shooter = Other(state.shooter);
  next.phase = Phase::kAwaitDefense;
  return next;
}

}  // namespace zkg::shufflepuck

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

// The measured game-service compartment, independent of any transport. A
// session is registered with an outbox that seals messages back to that
// player; everything else leaves only through EgressSinks.

#ifndef ZKG_SERVER_GAME_SERVICE_H_
#define ZKG_SERVER_GAME_SERVICE_H_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string_view>

#include "zkg/app/messages.h"
#include "zkg/base/bytes.h"
#include "zkg/policy/declassify.h"
#include "zkg/server/sinks.h"
#include "zkg/shufflepuck/match.h"

namespace zkg::server {

inline constexpr std::string_view kHighScoreSink = "highscores";
inline constexpr std::string_view kOpsLogSink = "ops-log";
inline constexpr uint32_t kHighScoreTopN = 10;

using SessionId = uint64_t;
// Seals one encoded app message to a single session.
using Outbox = std::function<void(const Bytes&)>;

struct GameConfig {
  uint32_t k_min = policy::kDefaultKMin;
  policy::PseudonymKey pseudonym_key{};
};

// Seed for the first-shooter draw: SHA-256 over a fixed tag and the match id.
Digest FirstShooterSeed(uint64_t match_id);
shufflepuck::Slot FirstShooter(uint64_t match_id);

class GameService {
 public:
  GameService(GameConfig config, EgressSinks& sinks);

  SessionId OpenSession(Outbox outbox);
  // Decodes and applies one client message. Replies and errors go out
  // through outboxes.
  void HandleMessage(SessionId session, ByteView plaintext);
  // Abandons any unfinished match the session was in.
  void CloseSession(SessionId session);

  size_t session_count() const;

 private:
  struct Session {
    Outbox outbox;
    // Set only by the login declassifier; the raw identity is never kept.
    std::optional<policy::Pseudonym> pseudonym;
    std::optional<uint64_t> match_id;
  };
  struct Room {
    uint64_t id = 0;
    std::array<std::optional<SessionId>, 2> players;
    std::array<policy::Pseudonym, 2> pseudonyms;
    std::optional<shufflepuck::MatchState> state;  // set once both joined
    // Hidden from both players; consumed by the next shot.
    std::optional<shufflepuck::Defense> pending_defense;
  };

  Status Dispatch(SessionId id, Session& s, const app::AppMessage& msg);
  Status OnLogin(Session& s, const app::Login& m);
  Status OnCreate(SessionId id, Session& s);
  Status OnJoin(SessionId id, Session& s, uint64_t match_id);
  Status OnDefense(SessionId id, Session& s, const app::DefenseMsg& m);
  Status OnShot(SessionId id, Session& s, const app::ShotMsg& m);
  Status OnHighScores(Session& s);

  Result<Room*> ActiveRoom(const Session& s);
  Result<shufflepuck::Slot> SlotOf(const Room& room, SessionId id) const;
  void SendTo(SessionId id, const app::AppMessage& msg);
  void Broadcast(const Room& room, const app::AppMessage& msg);
  void FinishMatch(Room& room);
  void OpsLog(std::string_view line);

  const GameConfig config_;
  EgressSinks& sinks_;

  mutable std::mutex mu_;
  SessionId next_session_ = 1;
  uint64_t next_match_ = 1;
  std::map<SessionId, Session> sessions_;
  std::map<uint64_t, Room> rooms_;
  // Cumulative points per pseudonym; released only through AggregateK.
  std::map<policy::Pseudonym, int64_t> high_scores_;
};

}  // namespace zkg::server

#endif  // ZKG_SERVER_GAME_SERVICE_H_

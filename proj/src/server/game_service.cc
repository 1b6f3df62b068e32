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

#include "zkg/server/game_service.h"

#include <string>

#include "zkg/base/crypto.h"

namespace zkg::server {

using shufflepuck::Phase;
using shufflepuck::Slot;

namespace {

size_t Index(Slot s) { return static_cast<size_t>(s); }

}  // namespace

Digest FirstShooterSeed(uint64_t match_id) {
  ByteWriter w;
  w.Raw(AsBytes("zkg-v1 first shooter")).U64(match_id);
  return crypto::Sha256(w.bytes());
}

Slot FirstShooter(uint64_t match_id) {
  return (FirstShooterSeed(match_id)[0] & 1) ? Slot::kB : Slot::kA;
}

GameService::GameService(GameConfig config, EgressSinks& sinks)
    : config_(config), sinks_(sinks) {}

SessionId GameService::OpenSession(Outbox outbox) {
  std::lock_guard lock(mu_);
  SessionId id = next_session_++;
  sessions_[id].outbox = std::move(outbox);
  return id;
}

size_t GameService::session_count() const {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

void GameService::HandleMessage(SessionId id, ByteView plaintext) {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return;
  Status st;
  auto msg = app::Decode(plaintext);
  if (!msg.ok()) {
    st = MakeError(Errc::kProtocolError, "malformed app message");
  } else {
    st = Dispatch(id, it->second, *msg);
  }
  if (!st.ok()) SendTo(id, app::ErrorMsg{st.code(), st.error().message});
}

Status GameService::Dispatch(SessionId id, Session& s, const app::AppMessage& msg) {
  if (auto* login = std::get_if<app::Login>(&msg)) return OnLogin(s, *login);
  if (!s.pseudonym) return MakeError(Errc::kNotLoggedIn, "log in first");
  if (std::holds_alternative<app::CreateMatch>(msg)) return OnCreate(id, s);
  if (auto* join = std::get_if<app::JoinMatch>(&msg)) return OnJoin(id, s, join->match_id);
  if (auto* d = std::get_if<app::DefenseMsg>(&msg)) return OnDefense(id, s, *d);
  if (auto* shot = std::get_if<app::ShotMsg>(&msg)) return OnShot(id, s, *shot);
  if (std::holds_alternative<app::HighScoreQuery>(msg)) return OnHighScores(s);
  return MakeError(Errc::kProtocolError, "not a client message");
}

Status GameService::OnLogin(Session& s, const app::Login& m) {
  if (s.match_id) return MakeError(Errc::kAlreadyInMatch, "cannot log in during a match");
  ZKG_ASSIGN_OR_RETURN(policy::Pseudonym p,
                       policy::Pseudonymize(m.identity, config_.pseudonym_key));
#ifdef ZKG_LEAKY_TEST_BUILD
  // Positive control for the canary scanner: persists the raw identity
  // under a false label. Never built into the real server.
  OpsLog("login " + std::string(m.identity.begin(), m.identity.end()));
#endif
  s.pseudonym = p;
  s.outbox(app::Encode(app::LoginOk{p}));
  return OkStatus();
}

Status GameService::OnCreate(SessionId id, Session& s) {
  if (s.match_id) return MakeError(Errc::kAlreadyInMatch, "already in a match");
  const uint64_t match_id = next_match_++;
  Room& room = rooms_[match_id];
  room.id = match_id;
  room.players[0] = id;
  room.pseudonyms[0] = *s.pseudonym;
  s.match_id = match_id;
  s.outbox(app::Encode(app::MatchCreated{match_id}));
  return OkStatus();
}

Status GameService::OnJoin(SessionId id, Session& s, uint64_t match_id) {
  if (s.match_id) return MakeError(Errc::kAlreadyInMatch, "already in a match");
  auto it = rooms_.find(match_id);
  if (it == rooms_.end()) return MakeError(Errc::kUnknownMatch, "no such match");
  Room& room = it->second;
  if (room.players[1]) return MakeError(Errc::kMatchFull, "match is full");
  room.players[1] = id;
  room.pseudonyms[1] = *s.pseudonym;
  s.match_id = match_id;

  const Slot first = FirstShooter(match_id);
  room.state = shufflepuck::NewMatch(first);
  OpsLog("match " + std::to_string(match_id) + " started first_shooter=" +
         SlotName(first) + " seed=" + ToHex(FirstShooterSeed(match_id)));
  for (Slot slot : {Slot::kA, Slot::kB}) {
    SendTo(*room.players[Index(slot)], app::MatchStarted{match_id, slot, *room.state});
  }
  return OkStatus();
}

Result<GameService::Room*> GameService::ActiveRoom(const Session& s) {
  if (!s.match_id) return MakeError(Errc::kUnknownMatch, "not in a match");
  auto it = rooms_.find(*s.match_id);
  if (it == rooms_.end()) return MakeError(Errc::kUnknownMatch, "match is gone");
  if (!it->second.state) return MakeError(Errc::kWrongPhase, "waiting for an opponent");
  return &it->second;
}

Result<Slot> GameService::SlotOf(const Room& room, SessionId id) const {
  if (room.players[0] == id) return Slot::kA;
  if (room.players[1] == id) return Slot::kB;
  return MakeError(Errc::kUnknownMatch, "not a player in this match");
}

Status GameService::OnDefense(SessionId id, Session& s, const app::DefenseMsg& m) {
  ZKG_ASSIGN_OR_RETURN(Room * room, ActiveRoom(s));
  ZKG_ASSIGN_OR_RETURN(Slot slot, SlotOf(*room, id));
  if (room->state->phase != Phase::kAwaitDefense) {
    return MakeError(Errc::kWrongPhase, "not awaiting a defense");
  }
  if (slot != room->state->defender()) return MakeError(Errc::kWrongRole, "not the defender");
  ZKG_RETURN_IF_ERROR(shufflepuck::ValidateDefense(m.defense));
  ZKG_ASSIGN_OR_RETURN(shufflepuck::MatchState next, shufflepuck::CommitDefense(*room->state));
  room->pending_defense = m.defense;
  room->state = next;
  Broadcast(*room, app::StateUpdate{room->id, next});
  return OkStatus();
}

Status GameService::OnShot(SessionId id, Session& s, const app::ShotMsg& m) {
  ZKG_ASSIGN_OR_RETURN(Room * room, ActiveRoom(s));
  ZKG_ASSIGN_OR_RETURN(Slot slot, SlotOf(*room, id));
  if (room->state->phase != Phase::kAwaitShot) {
    return MakeError(Errc::kWrongPhase, "not awaiting a shot");
  }
  if (slot != room->state->shooter) return MakeError(Errc::kWrongRole, "not the shooter");
  ZKG_ASSIGN_OR_RETURN(
      shufflepuck::ShotOutcome outcome,
      shufflepuck::ResolveShot(shufflepuck::kTableV1, shufflepuck::kTableV1.start_x, m.shot,
                               *room->pending_defense));
#ifdef ZKG_LEAKY_TEST_BUILD
  if (m.canary) {
    // Raw tag bytes, the way a careless telemetry dump would write them.
    OpsLog("shot " + std::string(m.canary->begin(), m.canary->end()) + " " +
           std::to_string(m.shot.angle_ddeg) + " " + std::to_string(m.shot.force));
  }
#endif
  // Raw inputs end here: only the outcome and the new state survive.
  room->pending_defense.reset();
  ZKG_ASSIGN_OR_RETURN(shufflepuck::MatchState next,
                       shufflepuck::ApplyOutcome(*room->state, outcome));
  room->state = next;
  Broadcast(*room, app::OutcomeMsg{room->id, outcome, next});
  if (next.phase == Phase::kFinished) FinishMatch(*room);
  return OkStatus();
}

void GameService::FinishMatch(Room& room) {
  for (Slot slot : {Slot::kA, Slot::kB}) {
    high_scores_[room.pseudonyms[Index(slot)]] += room.state->scores[Index(slot)];
    auto it = sessions_.find(*room.players[Index(slot)]);
    if (it != sessions_.end()) it->second.match_id.reset();
  }
  OpsLog("match " + std::to_string(room.id) + " finished after " +
         std::to_string(room.state->shots_played) + " shots");
  rooms_.erase(room.id);
}

Status GameService::OnHighScores(Session& s) {
  std::vector<policy::ScoreRow> rows;
  rows.reserve(high_scores_.size());
  for (const auto& [p, total] : high_scores_) rows.push_back({p, total});
  ZKG_ASSIGN_OR_RETURN(policy::AggregateResult result,
                       policy::AggregateK(rows, config_.k_min, kHighScoreTopN));
  app::HighScoreReply reply;
  if (auto* report = std::get_if<policy::AggregateReport>(&result)) reply.report = *report;
  Bytes encoded = app::Encode(reply);
  ZKG_RETURN_IF_ERROR(sinks_.Write(kHighScoreSink, policy::DataLabel::kAggregate, encoded));
  s.outbox(encoded);
  return OkStatus();
}

void GameService::CloseSession(SessionId id) {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return;
  if (it->second.match_id) {
    auto room_it = rooms_.find(*it->second.match_id);
    if (room_it != rooms_.end()) {
      for (const auto& other : room_it->second.players) {
        if (!other || *other == id) continue;
        auto o = sessions_.find(*other);
        if (o == sessions_.end()) continue;
        o->second.match_id.reset();
        SendTo(*other, app::ErrorMsg{Errc::kConnectionClosed, "opponent left"});
      }
      if (room_it->second.state) {
        OpsLog("match " + std::to_string(room_it->first) + " abandoned");
      }
      rooms_.erase(room_it);
    }
  }
  sessions_.erase(it);
}

void GameService::SendTo(SessionId id, const app::AppMessage& msg) {
  auto it = sessions_.find(id);
  if (it != sessions_.end()) it->second.outbox(app::Encode(msg));
}

void GameService::Broadcast(const Room& room, const app::AppMessage& msg) {
  Bytes encoded = app::Encode(msg);
  for (const auto& p : room.players) {
    auto it = p ? sessions_.find(*p) : sessions_.end();
    if (it != sessions_.end()) it->second.outbox(encoded);
  }
}

void GameService::OpsLog(std::string_view line) {
  std::string text(line);
  text.push_back('\n');
  // A failed log write must not take the match down; the chain still holds.
  (void)sinks_.Write(kOpsLogSink, policy::DataLabel::kAggregate, AsBytes(text));
}

}  // namespace zkg::server

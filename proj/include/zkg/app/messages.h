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

// Application messages carried inside sealed frames: [u8 app_type][payload].
// Payloads use the same primitives as every other canonical encoding
// (fixed-width little-endian integers, u32-prefixed byte strings).

#ifndef ZKG_APP_MESSAGES_H_
#define ZKG_APP_MESSAGES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zkg/base/bytes.h"
#include "zkg/base/result.h"
#include "zkg/policy/declassify.h"
#include "zkg/shufflepuck/match.h"
#include "zkg/shufflepuck/physics.h"

namespace zkg::app {

enum class AppType : uint8_t {
  kLogin = 0x20,
  kCreateMatch = 0x21,
  kJoinMatch = 0x22,
  kDefense = 0x23,
  kShot = 0x24,
  kOutcome = 0x25,
  kHighScoreQuery = 0x26,
  kHighScoreReply = 0x27,
  kLoginOk = 0x28,
  kMatchCreated = 0x29,
  kMatchStarted = 0x2A,
  kStateUpdate = 0x2B,
  kError = 0x2F,
};

// Test builds tag raw inputs with an 8-byte marker so a byte scan can tell
// whether they escaped. The server treats it as opaque and drops it.
using CanaryTag = std::array<uint8_t, 8>;

// Client to server.
struct Login {
  Bytes identity;
  friend bool operator==(const Login&, const Login&) = default;
};
struct CreateMatch {
  friend bool operator==(const CreateMatch&, const CreateMatch&) = default;
};
struct JoinMatch {
  uint64_t match_id = 0;
  friend bool operator==(const JoinMatch&, const JoinMatch&) = default;
};
struct DefenseMsg {
  std::optional<CanaryTag> canary;
  shufflepuck::Defense defense;
  friend bool operator==(const DefenseMsg&, const DefenseMsg&) = default;
};
struct ShotMsg {
  std::optional<CanaryTag> canary;
  shufflepuck::Shot shot;
  friend bool operator==(const ShotMsg&, const ShotMsg&) = default;
};
struct HighScoreQuery {
  friend bool operator==(const HighScoreQuery&, const HighScoreQuery&) = default;
};

// Server to client.
struct LoginOk {
  policy::Pseudonym pseudonym;
  friend bool operator==(const LoginOk&, const LoginOk&) = default;
};
struct MatchCreated {
  uint64_t match_id = 0;
  friend bool operator==(const MatchCreated&, const MatchCreated&) = default;
};
struct MatchStarted {
  uint64_t match_id = 0;
  shufflepuck::Slot your_slot = shufflepuck::Slot::kA;
  shufflepuck::MatchState state;
  friend bool operator==(const MatchStarted&, const MatchStarted&) = default;
};
// Sent to both players once the defense is committed. Carries no paddle
// position.
struct StateUpdate {
  uint64_t match_id = 0;
  shufflepuck::MatchState state;
  friend bool operator==(const StateUpdate&, const StateUpdate&) = default;
};
struct OutcomeMsg {
  uint64_t match_id = 0;
  shufflepuck::ShotOutcome outcome;
  shufflepuck::MatchState state;
  friend bool operator==(const OutcomeMsg&, const OutcomeMsg&) = default;
};
struct HighScoreReply {
  // nullopt means withheld.
  std::optional<policy::AggregateReport> report;
  friend bool operator==(const HighScoreReply&, const HighScoreReply&) = default;
};
struct ErrorMsg {
  Errc code = Errc::kOk;
  std::string message;
  friend bool operator==(const ErrorMsg&, const ErrorMsg&) = default;
};

using AppMessage =
    std::variant<Login, CreateMatch, JoinMatch, DefenseMsg, ShotMsg, HighScoreQuery,
                 LoginOk, MatchCreated, MatchStarted, StateUpdate, OutcomeMsg,
                 HighScoreReply, ErrorMsg>;

AppType TypeOf(const AppMessage& msg);
std::string_view AppTypeName(AppType type);

Bytes Encode(const AppMessage& msg);
// Strict: unknown types, short payloads and trailing bytes are kParseError
// or kTruncated.
Result<AppMessage> Decode(ByteView bytes);

}  // namespace zkg::app

#endif  // ZKG_APP_MESSAGES_H_

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

#include "zkg/app/messages.h"

#include <type_traits>

namespace zkg::app {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr size_t kCanaryBytes = 8;
constexpr uint8_t kReplyReport = 0;
constexpr uint8_t kReplyWithheld = 1;

void EncodePayload(ByteWriter& w, const AppMessage& msg) {
  std::visit(
      Overloaded{
          [&](const Login& m) { w.Prefixed(m.identity); },
          [&](const CreateMatch&) {},
          [&](const JoinMatch& m) { w.U64(m.match_id); },
          [&](const DefenseMsg& m) {
            if (m.canary) w.Raw(*m.canary);
            w.I32(m.defense.paddle_x);
          },
          [&](const ShotMsg& m) {
            if (m.canary) w.Raw(*m.canary);
            w.I32(m.shot.angle_ddeg).I32(m.shot.force);
          },
          [&](const HighScoreQuery&) {},
          [&](const LoginOk& m) { w.Raw(m.pseudonym.bytes); },
          [&](const MatchCreated& m) { w.U64(m.match_id); },
          [&](const MatchStarted& m) {
            w.U64(m.match_id).U8(static_cast<uint8_t>(m.your_slot)).Raw(m.state.Encode());
          },
          [&](const StateUpdate& m) { w.U64(m.match_id).Raw(m.state.Encode()); },
          [&](const OutcomeMsg& m) {
            w.U64(m.match_id).Raw(m.outcome.Encode()).Raw(m.state.Encode());
          },
          [&](const HighScoreReply& m) {
            if (!m.report) {
              w.U8(kReplyWithheld);
              return;
            }
            w.U8(kReplyReport).U32(static_cast<uint32_t>(m.report->entries.size()));
            for (const auto& e : m.report->entries) w.Raw(e.pseudonym.bytes).I64(e.total);
          },
          [&](const ErrorMsg& m) {
            w.U16(static_cast<uint16_t>(m.code)).Prefixed(m.message);
          },
      },
      msg);
}

// Optional canary prefix, recognized by total payload length.
Result<std::optional<CanaryTag>> ReadCanary(ByteReader& r, size_t plain_size) {
  if (r.remaining() == plain_size) return std::optional<CanaryTag>();
  if (r.remaining() != plain_size + kCanaryBytes) {
    return MakeError(Errc::kParseError, "bad input payload length");
  }
  ZKG_ASSIGN_OR_RETURN(auto tag, r.Fixed<kCanaryBytes>());
  return std::optional<CanaryTag>(tag);
}

Result<shufflepuck::Slot> ReadSlot(ByteReader& r) {
  ZKG_ASSIGN_OR_RETURN(uint8_t v, r.U8());
  if (v > 1) return MakeError(Errc::kParseError, "bad slot");
  return static_cast<shufflepuck::Slot>(v);
}

Result<AppMessage> DecodeBody(AppType type, ByteReader& r) {
  switch (type) {
    case AppType::kLogin: {
      ZKG_ASSIGN_OR_RETURN(ByteView id, r.Prefixed());
      return AppMessage(Login{Bytes(id.begin(), id.end())});
    }
    case AppType::kCreateMatch:
      return AppMessage(CreateMatch{});
    case AppType::kJoinMatch: {
      ZKG_ASSIGN_OR_RETURN(uint64_t id, r.U64());
      return AppMessage(JoinMatch{id});
    }
    case AppType::kDefense: {
      DefenseMsg m;
      ZKG_ASSIGN_OR_RETURN(m.canary, ReadCanary(r, 4));
      ZKG_ASSIGN_OR_RETURN(m.defense.paddle_x, r.I32());
      return AppMessage(m);
    }
    case AppType::kShot: {
      ShotMsg m;
      ZKG_ASSIGN_OR_RETURN(m.canary, ReadCanary(r, 8));
      ZKG_ASSIGN_OR_RETURN(m.shot.angle_ddeg, r.I32());
      ZKG_ASSIGN_OR_RETURN(m.shot.force, r.I32());
      return AppMessage(m);
    }
    case AppType::kHighScoreQuery:
      return AppMessage(HighScoreQuery{});
    case AppType::kLoginOk: {
      LoginOk m;
      ZKG_ASSIGN_OR_RETURN(m.pseudonym.bytes, r.Fixed<32>());
      return AppMessage(m);
    }
    case AppType::kMatchCreated: {
      ZKG_ASSIGN_OR_RETURN(uint64_t id, r.U64());
      return AppMessage(MatchCreated{id});
    }
    case AppType::kMatchStarted: {
      MatchStarted m;
      ZKG_ASSIGN_OR_RETURN(m.match_id, r.U64());
      ZKG_ASSIGN_OR_RETURN(m.your_slot, ReadSlot(r));
      ZKG_ASSIGN_OR_RETURN(m.state, shufflepuck::MatchState::Read(r));
      return AppMessage(m);
    }
    case AppType::kStateUpdate: {
      StateUpdate m;
      ZKG_ASSIGN_OR_RETURN(m.match_id, r.U64());
      ZKG_ASSIGN_OR_RETURN(m.state, shufflepuck::MatchState::Read(r));
      return AppMessage(m);
    }
    case AppType::kOutcome: {
      OutcomeMsg m;
      ZKG_ASSIGN_OR_RETURN(m.match_id, r.U64());
      ZKG_ASSIGN_OR_RETURN(m.outcome, shufflepuck::ShotOutcome::Read(r));
      ZKG_ASSIGN_OR_RETURN(m.state, shufflepuck::MatchState::Read(r));
      return AppMessage(m);
    }
    case AppType::kHighScoreReply: {
      ZKG_ASSIGN_OR_RETURN(uint8_t status, r.U8());
      if (status == kReplyWithheld) return AppMessage(HighScoreReply{});
      if (status != kReplyReport) return MakeError(Errc::kParseError, "bad reply status");
      ZKG_ASSIGN_OR_RETURN(uint32_t n, r.U32());
      if (n > r.remaining() / 40) return MakeError(Errc::kTruncated, "reply too short");
      policy::AggregateReport report;
      for (uint32_t i = 0; i < n; ++i) {
        policy::LeaderboardEntry e;
        ZKG_ASSIGN_OR_RETURN(e.pseudonym.bytes, r.Fixed<32>());
        ZKG_ASSIGN_OR_RETURN(e.total, r.I64());
        report.entries.push_back(e);
      }
      return AppMessage(HighScoreReply{std::move(report)});
    }
    case AppType::kError: {
      ErrorMsg m;
      ZKG_ASSIGN_OR_RETURN(uint16_t code, r.U16());
      m.code = static_cast<Errc>(code);
      ZKG_ASSIGN_OR_RETURN(ByteView text, r.Prefixed());
      m.message.assign(text.begin(), text.end());
      return AppMessage(m);
    }
  }
  return MakeError(Errc::kParseError, "unknown app message type");
}

}  // namespace

AppType TypeOf(const AppMessage& msg) {
  static constexpr AppType kTypes[] = {
      AppType::kLogin,        AppType::kCreateMatch,  AppType::kJoinMatch,
      AppType::kDefense,      AppType::kShot,         AppType::kHighScoreQuery,
      AppType::kLoginOk,      AppType::kMatchCreated, AppType::kMatchStarted,
      AppType::kStateUpdate,  AppType::kOutcome,      AppType::kHighScoreReply,
      AppType::kError,
  };
  static_assert(std::size(kTypes) == std::variant_size_v<AppMessage>);
  return kTypes[msg.index()];
}

std::string_view AppTypeName(AppType type) {
  switch (type) {
    case AppType::kLogin: return "Login";
    case AppType::kCreateMatch: return "CreateMatch";
    case AppType::kJoinMatch: return "JoinMatch";
    case AppType::kDefense: return "Defense";
    case AppType::kShot: return "Shot";
    case AppType::kOutcome: return "Outcome";
    case AppType::kHighScoreQuery: return "HighScoreQuery";
    case AppType::kHighScoreReply: return "HighScoreReply";
    case AppType::kLoginOk: return "LoginOk";
    case AppType::kMatchCreated: return "MatchCreated";
    case AppType::kMatchStarted: return "MatchStarted";
    case AppType::kStateUpdate: return "StateUpdate";
    case AppType::kError: return "Error";
  }
  return "Unknown";
}

Bytes Encode(const AppMessage& msg) {
  ByteWriter w;
  w.U8(static_cast<uint8_t>(TypeOf(msg)));
  EncodePayload(w, msg);
  return std::move(w).Take();
}

Result<AppMessage> Decode(ByteView bytes) {
  ByteReader r(bytes);
  ZKG_ASSIGN_OR_RETURN(uint8_t type, r.U8());
  ZKG_ASSIGN_OR_RETURN(AppMessage msg, DecodeBody(static_cast<AppType>(type), r));
  ZKG_RETURN_IF_ERROR(r.ExpectEnd());
  return msg;
}

}  // namespace zkg::app

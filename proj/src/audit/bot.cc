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

#include "zkg/audit/bot.h"

#include <memory>

#include "zkg/base/io.h"
#include "zkg/channel/secure_channel.h"

namespace zkg::audit {
namespace {

using shufflepuck::Phase;
using shufflepuck::Slot;

class BotSession {
 public:
  BotSession(int index, std::unique_ptr<channel::SecureChannel> ch,
             std::vector<TranscriptEntry>* transcript)
      : index_(index), ch_(std::move(ch)), transcript_(transcript) {}
  ~BotSession() { ch_->Close(); }

  Status Send(const app::AppMessage& msg) {
    Bytes bytes = app::Encode(msg);
    if (transcript_) transcript_->push_back({index_, true, bytes});
    return ch_->Send(bytes);
  }

  // Server errors are surfaced as failures carrying the server's code.
  Result<app::AppMessage> Receive() {
    ZKG_ASSIGN_OR_RETURN(Bytes bytes, ch_->Receive());
    if (transcript_) transcript_->push_back({index_, false, bytes});
    ZKG_ASSIGN_OR_RETURN(app::AppMessage msg, app::Decode(bytes));
    if (auto* err = std::get_if<app::ErrorMsg>(&msg)) {
      return MakeError(err->code, "server: " + err->message);
    }
    return msg;
  }

  template <typename T>
  Result<T> Expect() {
    ZKG_ASSIGN_OR_RETURN(app::AppMessage msg, Receive());
    if (auto* m = std::get_if<T>(&msg)) return *m;
    return MakeError(Errc::kProtocolError,
                     "unexpected " + std::string(app::AppTypeName(app::TypeOf(msg))));
  }

 private:
  int index_;
  std::unique_ptr<channel::SecureChannel> ch_;
  std::vector<TranscriptEntry>* transcript_;
};

Result<std::unique_ptr<BotSession>> Open(int index, const net::ServerAddress& address,
                                         const enclave::TrustStore& store,
                                         std::vector<TranscriptEntry>* transcript) {
  ZKG_ASSIGN_OR_RETURN(auto transport, net::Connect(address));
  ZKG_ASSIGN_OR_RETURN(auto ch, channel::SecureChannel::Connect(std::move(transport), store));
  return std::make_unique<BotSession>(index, std::move(ch), transcript);
}

Result<policy::Pseudonym> Login(BotSession& s, std::string_view identity) {
  ZKG_RETURN_IF_ERROR(s.Send(app::Login{ToBytes(identity)}));
  ZKG_ASSIGN_OR_RETURN(app::LoginOk ok, s.Expect<app::LoginOk>());
  return ok.pseudonym;
}

}  // namespace

BotScript BotScript::Fixed(std::vector<Turn> turns) {
  BotScript s;
  s.turns_ = std::move(turns);
  return s;
}

BotScript BotScript::Random(uint64_t seed) {
  BotScript s;
  s.rng_.emplace(seed);
  return s;
}

Result<BotScript> BotScript::Parse(std::string_view source) {
  constexpr std::string_view kRandom = "random:";
  if (source.substr(0, kRandom.size()) == kRandom) {
    std::string digits(source.substr(kRandom.size()));
    try {
      size_t used = 0;
      uint64_t seed = std::stoull(digits, &used);
      if (used == digits.size()) return Random(seed);
    } catch (const std::exception&) {
    }
    return MakeError(Errc::kInvalidArgument, "bad random seed '" + digits + "'");
  }
  ZKG_ASSIGN_OR_RETURN(nlohmann::json j, ReadJsonFile(std::string(source)));
  if (!j.is_array() || j.empty()) {
    return MakeError(Errc::kParseError, "bot script must be a non-empty array of turns");
  }
  std::vector<Turn> turns;
  for (const auto& t : j) {
    ZKG_RETURN_IF_ERROR(ExpectKeys(t, {"paddle_x", "angle", "force"}, {}, "bot turn"));
    Turn turn;
    try {
      turn.paddle_x = t["paddle_x"].get<int32_t>();
      turn.angle_ddeg = t["angle"].get<int32_t>();
      turn.force = t["force"].get<int32_t>();
    } catch (const nlohmann::json::exception& e) {
      return MakeError(Errc::kParseError, std::string("bot turn: ") + e.what());
    }
    turns.push_back(turn);
  }
  return Fixed(std::move(turns));
}

Turn BotScript::Next() {
  if (rng_) {
    const auto& t = shufflepuck::kTableV1;
    auto draw = [&](int64_t lo, int64_t hi) {
      return static_cast<int32_t>(lo + static_cast<int64_t>((*rng_)() % static_cast<uint64_t>(hi - lo + 1)));
    };
    Turn turn;
    turn.paddle_x = draw(0, t.width);
    turn.angle_ddeg = draw(-t.max_angle_ddeg, t.max_angle_ddeg);
    turn.force = draw(t.min_force, t.max_force);
    return turn;
  }
  Turn turn = turns_[next_];
  next_ = (next_ + 1) % turns_.size();
  return turn;
}

Result<BotResult> RunBotMatch(const BotOptions& options, BotScript& script) {
  BotResult result;
  std::array<std::unique_ptr<BotSession>, 2> bots;
  for (int i = 0; i < 2; ++i) {
    ZKG_ASSIGN_OR_RETURN(bots[static_cast<size_t>(i)],
                         Open(i, options.address, options.trust_store, &result.transcript));
  }
  for (size_t i = 0; i < 2; ++i) {
    ZKG_ASSIGN_OR_RETURN(result.pseudonyms[i], Login(*bots[i], options.identities[i]));
  }

  ZKG_RETURN_IF_ERROR(bots[0]->Send(app::CreateMatch{}));
  ZKG_ASSIGN_OR_RETURN(app::MatchCreated created, bots[0]->Expect<app::MatchCreated>());
  result.match_id = created.match_id;
  ZKG_RETURN_IF_ERROR(bots[1]->Send(app::JoinMatch{created.match_id}));
  shufflepuck::MatchState state;
  for (size_t i = 0; i < 2; ++i) {
    ZKG_ASSIGN_OR_RETURN(app::MatchStarted started, bots[i]->Expect<app::MatchStarted>());
    result.slots[i] = started.your_slot;
    state = started.state;
  }
  if (result.slots[0] == result.slots[1]) {
    return MakeError(Errc::kProtocolError, "both bots were given the same slot");
  }
  auto bot_for = [&](Slot slot) -> BotSession& {
    return *bots[result.slots[0] == slot ? 0 : 1];
  };

  for (size_t turn_no = 0; state.phase != Phase::kFinished; ++turn_no) {
    if (turn_no >= options.max_turns) {
      return MakeError(Errc::kProtocolError, "match did not finish within the turn limit");
    }
    const Turn turn = script.Next();
    ZKG_RETURN_IF_ERROR(bot_for(state.defender())
                            .Send(app::DefenseMsg{options.canary, {turn.paddle_x}}));
    for (auto& b : bots) {
      ZKG_ASSIGN_OR_RETURN(app::StateUpdate update, b->Expect<app::StateUpdate>());
      state = update.state;
    }
    ZKG_RETURN_IF_ERROR(bot_for(state.shooter)
                            .Send(app::ShotMsg{options.canary, {turn.angle_ddeg, turn.force}}));
    for (auto& b : bots) {
      ZKG_ASSIGN_OR_RETURN(app::OutcomeMsg outcome, b->Expect<app::OutcomeMsg>());
      state = outcome.state;
    }
  }
  result.final_state = state;

  if (options.query_highscores) {
    ZKG_RETURN_IF_ERROR(bots[0]->Send(app::HighScoreQuery{}));
    ZKG_ASSIGN_OR_RETURN(result.high_scores, bots[0]->Expect<app::HighScoreReply>());
  }
  return result;
}

Result<app::HighScoreReply> QueryHighScores(const net::ServerAddress& address,
                                            const enclave::TrustStore& store,
                                            std::string_view identity) {
  ZKG_ASSIGN_OR_RETURN(auto bot, Open(0, address, store, nullptr));
  ZKG_RETURN_IF_ERROR(Login(*bot, identity));
  ZKG_RETURN_IF_ERROR(bot->Send(app::HighScoreQuery{}));
  return bot->Expect<app::HighScoreReply>();
}

std::string FormatTranscript(const std::vector<TranscriptEntry>& transcript) {
  std::string out;
  for (const auto& e : transcript) {
    auto type = e.plaintext.empty() ? std::string_view("?")
                                    : app::AppTypeName(static_cast<app::AppType>(e.plaintext[0]));
    out += "bot" + std::to_string(e.bot) + (e.outbound ? " > " : " < ") + std::string(type) +
           " " + ToHex(e.plaintext) + "\n";
  }
  return out;
}

}  // namespace zkg::audit

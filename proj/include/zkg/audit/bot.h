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

// Headless client that plays one full match as two players over two
// attested sessions. Sessions are driven in lockstep from one thread, so a
// script always produces the same transcript.

#ifndef ZKG_AUDIT_BOT_H_
#define ZKG_AUDIT_BOT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zkg/app/messages.h"
#include "zkg/base/result.h"
#include "zkg/enclave/attestation.h"
#include "zkg/net/net.h"
#include "zkg/policy/declassify.h"
#include "zkg/shufflepuck/match.h"

namespace zkg::audit {

// One turn: the defender's paddle, then the shooter's shot.
struct Turn {
  int32_t paddle_x = 0;
  int32_t angle_ddeg = 0;
  int32_t force = 1;
  friend bool operator==(const Turn&, const Turn&) = default;
};

// Either a fixed list of turns, replayed cyclically, or uniform random
// legal turns from a seed.
class BotScript {
 public:
  static BotScript Fixed(std::vector<Turn> turns);
  static BotScript Random(uint64_t seed);
  // "random:<seed>" or the path of a JSON array of
  // {"paddle_x", "angle", "force"} objects.
  static Result<BotScript> Parse(std::string_view source);

  Turn Next();

 private:
  std::vector<Turn> turns_;
  size_t next_ = 0;
  std::optional<std::mt19937_64> rng_;
};

struct BotOptions {
  net::ServerAddress address;
  enclave::TrustStore trust_store;
  std::array<std::string, 2> identities = {"bot-a", "bot-b"};
  // Prefixed to every Shot and Defense payload when set.
  std::optional<app::CanaryTag> canary;
  bool query_highscores = false;
  size_t max_turns = 5000;
};

struct TranscriptEntry {
  int bot = 0;          // 0 created the match, 1 joined it
  bool outbound = true;  // sent by the bot
  Bytes plaintext;
};

struct BotResult {
  uint64_t match_id = 0;
  shufflepuck::MatchState final_state;
  std::array<shufflepuck::Slot, 2> slots{};  // indexed by bot
  std::array<policy::Pseudonym, 2> pseudonyms{};
  std::optional<app::HighScoreReply> high_scores;
  std::vector<TranscriptEntry> transcript;

  // Points scored by bot i in this match.
  uint32_t points(int bot) const {
    return final_state.scores[static_cast<size_t>(slots[static_cast<size_t>(bot)])];
  }
};

// Handshake failures come back as kHandshakeAborted before any application
// byte is sent.
Result<BotResult> RunBotMatch(const BotOptions& options, BotScript& script);

// One session: log in, ask for the high-score table, disconnect.
Result<app::HighScoreReply> QueryHighScores(const net::ServerAddress& address,
                                            const enclave::TrustStore& store,
                                            std::string_view identity);

// "<bot> <'>'|'<'> <type> <hex>" per line.
std::string FormatTranscript(const std::vector<TranscriptEntry>& transcript);

}  // namespace zkg::audit

#endif  // ZKG_AUDIT_BOT_H_

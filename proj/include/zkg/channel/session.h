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

#ifndef ZKG_CHANNEL_SESSION_H_
#define ZKG_CHANNEL_SESSION_H_

#include <cstdint>
#include <limits>

#include "zkg/base/bytes.h"
#include "zkg/base/crypto.h"
#include "zkg/base/result.h"

namespace zkg::channel {

enum class Role : uint8_t { kClient, kServer };

// The byte value is part of each frame's associated data.
enum class Direction : uint8_t {
  kClientToServer = 0x00,
  kServerToClient = 0x01,
};

inline constexpr uint64_t kMaxSeq = std::numeric_limits<uint64_t>::max();

// Sealed application data. On the wire: seq (u64 LE) followed by the AEAD
// output, inside a msg_type 0x10 message.
struct Frame {
  uint64_t seq = 0;
  Bytes ciphertext;

  Bytes EncodePayload() const;
  static Result<Frame> DecodePayload(ByteView payload);
  Bytes ToWire() const;

  friend bool operator==(const Frame&, const Frame&) = default;
};

// Per-session directional keys and counters. Not shareable across sessions;
// one owner seals and one owner opens.
struct SessionKeys {
  Role role = Role::kClient;
  crypto::AeadKey key_c2s{};
  crypto::AeadKey key_s2c{};
  Digest transcript_hash{};
  uint64_t send_seq = 0;
  uint64_t recv_seq = 0;

  Direction outbound() const {
    return role == Role::kClient ? Direction::kClientToServer
                                 : Direction::kServerToClient;
  }
  Direction inbound() const {
    return role == Role::kClient ? Direction::kServerToClient
                                 : Direction::kClientToServer;
  }
  const crypto::AeadKey& key_for(Direction d) const {
    return d == Direction::kClientToServer ? key_c2s : key_s2c;
  }
};

// Associated data for a frame: seq (u64 LE) || direction byte.
Bytes FrameAssociatedData(uint64_t seq, Direction direction);

// Seals with the key for the given direction, which must be this side's outbound
// direction. Consumes send_seq.
Result<Frame> Seal(SessionKeys& keys, Direction direction, ByteView plaintext);

// Authenticates first, then enforces frame.seq == recv_seq. Corruption of
// either ciphertext or seq is kAuthFailure; an intact old frame is
// kReplayDetected; an intact future frame is kSequenceGap.
Result<Bytes> Open(SessionKeys& keys, Direction direction, const Frame& frame);

}  // namespace zkg::channel

#endif  // ZKG_CHANNEL_SESSION_H_

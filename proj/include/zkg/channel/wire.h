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

// Wire framing shared by the TCP and WebSocket transports:
//   [u32 LE length][u8 msg_type][payload]
// where length counts the msg_type byte plus the payload.

#ifndef ZKG_CHANNEL_WIRE_H_
#define ZKG_CHANNEL_WIRE_H_

#include <cstdint>

#include "zkg/base/bytes.h"
#include "zkg/base/result.h"

namespace zkg::channel {

enum class MsgType : uint8_t {
  kClientHello = 0x01,
  kServerAttest = 0x02,
  kFrame = 0x10,
};

inline constexpr size_t kLengthPrefixBytes = 4;
inline constexpr uint32_t kMaxMessageBytes = 1u << 20;

struct WireMessage {
  MsgType type = MsgType::kFrame;
  Bytes payload;
};

Bytes EncodeMessage(MsgType type, ByteView payload);

// Decodes exactly one complete message; trailing bytes are an error.
Result<WireMessage> DecodeMessage(ByteView bytes);

// Validates a 4-byte length prefix and returns the body length that follows.
Result<uint32_t> DecodeLengthPrefix(ByteView prefix);

}  // namespace zkg::channel

#endif  // ZKG_CHANNEL_WIRE_H_

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

#include "zkg/channel/wire.h"

namespace zkg::channel {

Bytes EncodeMessage(MsgType type, ByteView payload) {
  ByteWriter w;
  w.U32(static_cast<uint32_t>(payload.size() + 1)).U8(static_cast<uint8_t>(type)).Raw(payload);
  return std::move(w).Take();
}

Result<uint32_t> DecodeLengthPrefix(ByteView prefix) {
  ByteReader r(prefix);
  ZKG_ASSIGN_OR_RETURN(uint32_t len, r.U32());
  if (len == 0) {
    return MakeError(Errc::kProtocolError, "zero-length message");
  }
  if (len > kMaxMessageBytes) {
    return MakeError(Errc::kProtocolError, "message exceeds size limit");
  }
  return len;
}

Result<WireMessage> DecodeMessage(ByteView bytes) {
  if (bytes.size() < kLengthPrefixBytes) {
    return MakeError(Errc::kProtocolError, "short message");
  }
  auto len = DecodeLengthPrefix(bytes.first(kLengthPrefixBytes));
  if (!len.ok()) return len.error();
  if (bytes.size() - kLengthPrefixBytes != *len) {
    return MakeError(Errc::kProtocolError, "length prefix does not match message size");
  }
  uint8_t type = bytes[kLengthPrefixBytes];
  switch (type) {
    case static_cast<uint8_t>(MsgType::kClientHello):
    case static_cast<uint8_t>(MsgType::kServerAttest):
    case static_cast<uint8_t>(MsgType::kFrame):
      break;
    default:
      return MakeError(Errc::kProtocolError, "unknown msg_type " + std::to_string(type));
  }
  ByteView payload = bytes.subspan(kLengthPrefixBytes + 1);
  return WireMessage{static_cast<MsgType>(type), Bytes(payload.begin(), payload.end())};
}

}  // namespace zkg::channel

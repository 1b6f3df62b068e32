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

#include "zkg/channel/session.h"

#include "zkg/channel/wire.h"

namespace zkg::channel {

Bytes Frame::EncodePayload() const {
  ByteWriter w;
  w.U64(seq).Raw(ciphertext);
  return std::move(w).Take();
}

Result<Frame> Frame::DecodePayload(ByteView payload) {
  ByteReader r(payload);
  Frame f;
  auto seq = r.U64();
  if (!seq.ok()) return MakeError(Errc::kProtocolError, "frame too short");
  f.seq = *seq;
  if (r.remaining() < crypto::kAeadTagBytes) {
    return MakeError(Errc::kProtocolError, "frame shorter than its tag");
  }
  auto rest = r.Raw(r.remaining());
  f.ciphertext.assign(rest->begin(), rest->end());
  return f;
}

Bytes Frame::ToWire() const { return EncodeMessage(MsgType::kFrame, EncodePayload()); }

Bytes FrameAssociatedData(uint64_t seq, Direction direction) {
  ByteWriter w;
  w.U64(seq).U8(static_cast<uint8_t>(direction));
  return std::move(w).Take();
}

Result<Frame> Seal(SessionKeys& keys, Direction direction, ByteView plaintext) {
  if (direction != keys.outbound()) {
    return MakeError(Errc::kInvalidArgument, "cannot seal in the inbound direction");
  }
  if (keys.send_seq == kMaxSeq) {
    return MakeError(Errc::kSequenceOverflow, "send sequence exhausted");
  }
  Frame frame;
  frame.seq = keys.send_seq;
  frame.ciphertext = crypto::AeadSeal(keys.key_for(direction), frame.seq,
                                      FrameAssociatedData(frame.seq, direction), plaintext);
  ++keys.send_seq;
  return frame;
}

Result<Bytes> Open(SessionKeys& keys, Direction direction, const Frame& frame) {
  if (direction != keys.inbound()) {
    return MakeError(Errc::kInvalidArgument, "cannot open in the outbound direction");
  }
  auto plaintext = crypto::AeadOpen(keys.key_for(direction), frame.seq,
                                    FrameAssociatedData(frame.seq, direction),
                                    frame.ciphertext);
  if (!plaintext.ok()) return plaintext.error();
  if (frame.seq < keys.recv_seq) {
    return MakeError(Errc::kReplayDetected,
                     "frame " + std::to_string(frame.seq) + " already accepted");
  }
  if (frame.seq > keys.recv_seq) {
    return MakeError(Errc::kSequenceGap, "expected frame " + std::to_string(keys.recv_seq) +
                                             ", got " + std::to_string(frame.seq));
  }
  if (keys.recv_seq == kMaxSeq) {
    return MakeError(Errc::kSequenceOverflow, "receive sequence exhausted");
  }
  ++keys.recv_seq;
  return plaintext;
}

}  // namespace zkg::channel

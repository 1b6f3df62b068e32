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

#include "zkg/channel/secure_channel.h"

#include "zkg/channel/wire.h"

namespace zkg::channel {

Result<std::unique_ptr<SecureChannel>> SecureChannel::Connect(
    std::unique_ptr<MessageTransport> transport, const enclave::TrustStore& store) {
  return Connect(std::move(transport), store, ClientHandshake::Start());
}

Result<std::unique_ptr<SecureChannel>> SecureChannel::Connect(
    std::unique_ptr<MessageTransport> transport, const enclave::TrustStore& store,
    const ClientHandshake& handshake) {
  auto abort = [&](Error e) -> Error {
    transport->Close();
    if (e.code != Errc::kHandshakeAborted) {
      e = Error{Errc::kHandshakeAborted, e.message, e.code};
    }
    return e;
  };
  if (auto s = transport->Send(handshake.hello().ToWire()); !s.ok()) {
    return abort(s.error());
  }
  auto raw = transport->Receive();
  if (!raw.ok()) return abort(raw.error());
  auto msg = DecodeMessage(*raw);
  if (!msg.ok()) return abort(msg.error());
  if (msg->type != MsgType::kServerAttest) {
    return abort(MakeError(Errc::kProtocolError, "expected ServerAttest"));
  }
  auto attest = ServerAttest::DecodePayload(msg->payload);
  if (!attest.ok()) return abort(attest.error());
  auto keys = handshake.Finish(*attest, store);
  if (!keys.ok()) return abort(keys.error());
  return std::unique_ptr<SecureChannel>(new SecureChannel(std::move(transport), *keys));
}

Result<std::unique_ptr<SecureChannel>> SecureChannel::Accept(
    std::unique_ptr<MessageTransport> transport, const enclave::Measurement& measurement,
    const enclave::PlatformKey& platform_key) {
  auto fail = [&](Error e) -> Error {
    transport->Close();
    return e;
  };
  auto raw = transport->Receive();
  if (!raw.ok()) return fail(raw.error());
  auto msg = DecodeMessage(*raw);
  if (!msg.ok()) return fail(msg.error());
  if (msg->type != MsgType::kClientHello) {
    return fail(MakeError(Errc::kProtocolError, "first message must be ClientHello"));
  }
  auto hello = ClientHello::DecodePayload(msg->payload);
  if (!hello.ok()) return fail(hello.error());
  auto response = ServerRespond(*hello, measurement, platform_key,
                                crypto::KexKeyPair::Generate());
  if (!response.ok()) return fail(response.error());
  if (auto s = transport->Send(response->attest.ToWire()); !s.ok()) {
    return fail(s.error());
  }
  return std::unique_ptr<SecureChannel>(
      new SecureChannel(std::move(transport), response->keys));
}

Status SecureChannel::Send(ByteView plaintext) {
  std::lock_guard lock(send_mu_);
  ZKG_ASSIGN_OR_RETURN(Frame frame, Seal(keys_, keys_.outbound(), plaintext));
  return transport_->Send(frame.ToWire());
}

Result<Bytes> SecureChannel::Receive() {
  std::lock_guard lock(recv_mu_);
  ZKG_ASSIGN_OR_RETURN(Bytes raw, transport_->Receive());
  ZKG_ASSIGN_OR_RETURN(WireMessage msg, DecodeMessage(raw));
  if (msg.type != MsgType::kFrame) {
    return MakeError(Errc::kProtocolError, "expected a sealed frame");
  }
  ZKG_ASSIGN_OR_RETURN(Frame frame, Frame::DecodePayload(msg.payload));
  return Open(keys_, keys_.inbound(), frame);
}

void SecureChannel::Close() { transport_->Close(); }

}  // namespace zkg::channel

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

#ifndef ZKG_CHANNEL_SECURE_CHANNEL_H_
#define ZKG_CHANNEL_SECURE_CHANNEL_H_

#include <memory>
#include <mutex>

#include "zkg/base/bytes.h"
#include "zkg/base/result.h"
#include "zkg/channel/handshake.h"
#include "zkg/channel/session.h"
#include "zkg/channel/transport.h"
#include "zkg/enclave/attestation.h"

namespace zkg::channel {

// A transport plus session keys. Application bytes can only be sent through
// an instance, and instances only exist after a successful handshake, which
// is what makes "no data before attestation" structural.
class SecureChannel {
 public:
  // Client side: hello, wait for ServerAttest, verify, derive keys.
  static Result<std::unique_ptr<SecureChannel>> Connect(
      std::unique_ptr<MessageTransport> transport, const enclave::TrustStore& store);
  // Client side with a caller-supplied handshake state (tests, golden vectors).
  static Result<std::unique_ptr<SecureChannel>> Connect(
      std::unique_ptr<MessageTransport> transport, const enclave::TrustStore& store,
      const ClientHandshake& handshake);

  // Server side: expects a ClientHello as the very first message.
  static Result<std::unique_ptr<SecureChannel>> Accept(
      std::unique_ptr<MessageTransport> transport, const enclave::Measurement& measurement,
      const enclave::PlatformKey& platform_key);

  // Thread-safe against concurrent Receive.
  Status Send(ByteView plaintext);
  Result<Bytes> Receive();
  void Close();

  const Digest& transcript_hash() const { return keys_.transcript_hash; }
  MessageTransport& transport() { return *transport_; }

 private:
  SecureChannel(std::unique_ptr<MessageTransport> transport, SessionKeys keys)
      : transport_(std::move(transport)), keys_(keys) {}

  std::unique_ptr<MessageTransport> transport_;
  std::mutex send_mu_;
  std::mutex recv_mu_;
  // Counters are split by direction, guarded by the matching mutex.
  SessionKeys keys_;
};

}  // namespace zkg::channel

#endif  // ZKG_CHANNEL_SECURE_CHANNEL_H_

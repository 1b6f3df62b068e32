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

// One-shot attested key exchange. The client sends a fresh nonce and an
// ephemeral X25519 key; the server answers with its own ephemeral key and a
// platform quote whose report_data is H(nonce || client_eph_pub ||
// server_eph_pub). The client derives keys only after the quote verifies.

#ifndef ZKG_CHANNEL_HANDSHAKE_H_
#define ZKG_CHANNEL_HANDSHAKE_H_

#include <array>

#include "zkg/base/bytes.h"
#include "zkg/base/crypto.h"
#include "zkg/base/result.h"
#include "zkg/channel/session.h"
#include "zkg/enclave/attestation.h"
#include "zkg/enclave/manifest.h"

namespace zkg::channel {

using Nonce = std::array<uint8_t, 32>;

struct ClientHello {
  Nonce nonce{};
  crypto::KexPublicKey client_eph_pub{};

  Bytes EncodePayload() const;
  static Result<ClientHello> DecodePayload(ByteView payload);
  Bytes ToWire() const;

  friend bool operator==(const ClientHello&, const ClientHello&) = default;
};

struct ServerAttest {
  crypto::KexPublicKey server_eph_pub{};
  enclave::AttestationQuote quote;

  Bytes EncodePayload() const;
  static Result<ServerAttest> DecodePayload(ByteView payload);
  Bytes ToWire() const;

  friend bool operator==(const ServerAttest&, const ServerAttest&) = default;
};

enclave::ReportData HandshakeReportData(const ClientHello& hello,
                                        const crypto::KexPublicKey& server_eph_pub);

// SHA-256 over the two framed handshake messages, client first.
Digest TranscriptHash(const ClientHello& hello, const ServerAttest& attest);

// Directional keys from the agreed secret, salted with the transcript hash.
SessionKeys DeriveSessionKeys(Role role, ByteView shared_secret,
                              const Digest& transcript_hash);

class ClientHandshake {
 public:
  // Fresh random nonce and ephemeral key.
  static ClientHandshake Start();
  // Fixed inputs for golden-vector tests only.
  static ClientHandshake FromFixed(const Nonce& nonce,
                                   const crypto::KexSecretKey& eph_secret);

  const ClientHello& hello() const { return hello_; }

  // Verifies the server's quote against the trust store and only then derives keys.
  // Any verification failure is reported as kHandshakeAborted with the
  // VerifyQuote error as its cause.
  Result<SessionKeys> Finish(const ServerAttest& attest,
                             const enclave::TrustStore& store) const;

 private:
  ClientHello hello_;
  crypto::KexKeyPair eph_;
};

struct ServerResponse {
  ServerAttest attest;
  SessionKeys keys;
};

Result<ServerResponse> ServerRespond(const ClientHello& hello,
                                     const enclave::ComponentManifest& manifest,
                                     const enclave::PlatformKey& platform_key);
// Variant with a pre-computed measurement and explicit ephemeral key.
Result<ServerResponse> ServerRespond(const ClientHello& hello,
                                     const enclave::Measurement& measurement,
                                     const enclave::PlatformKey& platform_key,
                                     const crypto::KexKeyPair& server_eph);

}  // namespace zkg::channel

#endif  // ZKG_CHANNEL_HANDSHAKE_H_

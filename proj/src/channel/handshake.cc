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

#include "zkg/channel/handshake.h"

#include "zkg/channel/wire.h"

namespace zkg::channel {
namespace {

constexpr std::string_view kInfoC2S = "zkg-v1 key c2s";
constexpr std::string_view kInfoS2C = "zkg-v1 key s2c";

}  // namespace

Bytes ClientHello::EncodePayload() const {
  ByteWriter w;
  w.Raw(nonce).Raw(client_eph_pub);
  return std::move(w).Take();
}

Result<ClientHello> ClientHello::DecodePayload(ByteView payload) {
  if (payload.size() != 64) {
    return MakeError(Errc::kProtocolError, "ClientHello must be 64 bytes");
  }
  ByteReader r(payload);
  ClientHello h;
  h.nonce = *r.Fixed<32>();
  h.client_eph_pub = *r.Fixed<32>();
  return h;
}

Bytes ClientHello::ToWire() const {
  return EncodeMessage(MsgType::kClientHello, EncodePayload());
}

Bytes ServerAttest::EncodePayload() const {
  ByteWriter w;
  w.Raw(server_eph_pub).Raw(quote.Encode());
  return std::move(w).Take();
}

Result<ServerAttest> ServerAttest::DecodePayload(ByteView payload) {
  ByteReader r(payload);
  ServerAttest a;
  auto pub = r.Fixed<32>();
  if (!pub.ok()) return MakeError(Errc::kProtocolError, "ServerAttest too short");
  a.server_eph_pub = *pub;
  auto quote = enclave::AttestationQuote::Read(r);
  if (!quote.ok()) {
    return MakeError(Errc::kProtocolError, "bad quote: " + quote.error().message);
  }
  a.quote = std::move(*quote);
  if (!r.empty()) return MakeError(Errc::kProtocolError, "trailing bytes after quote");
  return a;
}

Bytes ServerAttest::ToWire() const {
  return EncodeMessage(MsgType::kServerAttest, EncodePayload());
}

enclave::ReportData HandshakeReportData(const ClientHello& hello,
                                        const crypto::KexPublicKey& server_eph_pub) {
  return crypto::Sha256Concat({hello.nonce, hello.client_eph_pub, server_eph_pub});
}

Digest TranscriptHash(const ClientHello& hello, const ServerAttest& attest) {
  Bytes h = hello.ToWire();
  Bytes a = attest.ToWire();
  return crypto::Sha256Concat({h, a});
}

SessionKeys DeriveSessionKeys(Role role, ByteView shared_secret,
                              const Digest& transcript_hash) {
  SessionKeys keys;
  keys.role = role;
  keys.transcript_hash = transcript_hash;
  keys.key_c2s = crypto::HkdfSha256(shared_secret, transcript_hash, kInfoC2S);
  keys.key_s2c = crypto::HkdfSha256(shared_secret, transcript_hash, kInfoS2C);
  return keys;
}

ClientHandshake ClientHandshake::Start() {
  return FromFixed(crypto::RandomArray<32>(), crypto::RandomArray<crypto::kKexBytes>());
}

ClientHandshake ClientHandshake::FromFixed(const Nonce& nonce,
                                           const crypto::KexSecretKey& eph_secret) {
  ClientHandshake hs;
  hs.eph_ = crypto::KexKeyPair::FromSecret(eph_secret);
  hs.hello_.nonce = nonce;
  hs.hello_.client_eph_pub = hs.eph_.public_key;
  return hs;
}

Result<SessionKeys> ClientHandshake::Finish(const ServerAttest& attest,
                                            const enclave::TrustStore& store) const {
  auto verified = enclave::VerifyQuote(
      store, attest.quote, HandshakeReportData(hello_, attest.server_eph_pub));
  if (!verified.ok()) {
    return Error{Errc::kHandshakeAborted, verified.error().message, verified.error().code};
  }
  auto shared = crypto::KeyAgreement(eph_.secret, attest.server_eph_pub);
  if (!shared.ok()) {
    return Error{Errc::kHandshakeAborted, shared.error().message, shared.error().code};
  }
  return DeriveSessionKeys(Role::kClient, *shared, TranscriptHash(hello_, attest));
}

Result<ServerResponse> ServerRespond(const ClientHello& hello,
                                     const enclave::Measurement& measurement,
                                     const enclave::PlatformKey& platform_key,
                                     const crypto::KexKeyPair& server_eph) {
  auto shared = crypto::KeyAgreement(server_eph.secret, hello.client_eph_pub);
  if (!shared.ok()) return shared.error();
  ServerResponse response;
  response.attest.server_eph_pub = server_eph.public_key;
  response.attest.quote = enclave::GenerateQuote(
      platform_key, measurement, HandshakeReportData(hello, server_eph.public_key));
  response.keys = DeriveSessionKeys(Role::kServer, *shared,
                                    TranscriptHash(hello, response.attest));
  return response;
}

Result<ServerResponse> ServerRespond(const ClientHello& hello,
                                     const enclave::ComponentManifest& manifest,
                                     const enclave::PlatformKey& platform_key) {
  ZKG_ASSIGN_OR_RETURN(enclave::Measurement m, enclave::Measure(manifest));
  return ServerRespond(hello, m, platform_key, crypto::KexKeyPair::Generate());
}

}  // namespace zkg::channel

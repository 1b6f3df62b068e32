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

#include <gtest/gtest.h>

#include <thread>

#include "support/generators.h"
#include "support/test_paths.h"
#include "zkg/base/io.h"
#include "zkg/channel/handshake.h"
#include "zkg/channel/secure_channel.h"
#include "zkg/channel/session.h"
#include "zkg/channel/transport.h"
#include "zkg/channel/wire.h"

namespace zkg::channel {
namespace {

using enclave::Measurement;
using enclave::PlatformKey;
using enclave::TrustStore;
using testing::FixturePath;

template <size_t N>
std::array<uint8_t, N> Hex(const nlohmann::json& j, const char* key) {
  return *FromHexFixed<N>(j.at(key).get<std::string>());
}

class GoldenVectorTest : public ::testing::Test {
 protected:
  void SetUp() override {
    auto j = ReadJsonFile(FixturePath("channel-vectors.json"));
    ASSERT_TRUE(j.ok());
    v_ = *j;
    auto manifest = enclave::LoadManifest(FixturePath("manifest-a.json"));
    ASSERT_TRUE(manifest.ok());
    measurement_ = *enclave::Measure(*manifest);
    key_ = PlatformKey::FromSeed(v_["platform_key_id"], Hex<32>(v_, "platform_seed"));
    store_.AddPlatformKey(key_.key_id, key_.signing_key.public_key());
    store_.AddExpectedMeasurement(measurement_);
  }

  std::string HexOf(ByteView b) { return ToHex(b); }

  nlohmann::json v_;
  Measurement measurement_;
  PlatformKey key_;
  TrustStore store_;
};

TEST_F(GoldenVectorTest, HandshakeMatchesIndependentImplementation) {
  EXPECT_EQ(ToHex(key_.signing_key.public_key()), v_["platform_public_key"]);
  EXPECT_EQ(measurement_.ToHex(), v_["measurement"]);

  auto client = ClientHandshake::FromFixed(Hex<32>(v_, "nonce"),
                                           Hex<32>(v_, "client_eph_secret"));
  EXPECT_EQ(ToHex(client.hello().ToWire()), v_["client_hello_wire"]);

  auto server_eph = crypto::KexKeyPair::FromSecret(Hex<32>(v_, "server_eph_secret"));
  auto resp = ServerRespond(client.hello(), measurement_, key_, server_eph);
  ASSERT_TRUE(resp.ok());
  EXPECT_EQ(ToHex(resp->attest.ToWire()), v_["server_attest_wire"]);
  EXPECT_EQ(ToHex(resp->attest.quote.report_data), v_["report_data"]);

  auto keys = client.Finish(resp->attest, store_);
  ASSERT_TRUE(keys.ok()) << keys.error().ToString();
  EXPECT_EQ(ToHex(keys->transcript_hash), v_["transcript_hash"]);
  EXPECT_EQ(ToHex(keys->key_c2s), v_["key_c2s"]);
  EXPECT_EQ(ToHex(keys->key_s2c), v_["key_s2c"]);
  EXPECT_EQ(resp->keys.key_c2s, keys->key_c2s);
  EXPECT_EQ(resp->keys.key_s2c, keys->key_s2c);

  auto pt = *FromHex(v_["login_plaintext"].get<std::string>());
  auto frame = Seal(*keys, Direction::kClientToServer, pt);
  ASSERT_TRUE(frame.ok());
  EXPECT_EQ(ToHex(frame->ToWire()), v_["login_frame_wire"]);
  auto opened = Open(resp->keys, Direction::kClientToServer, *frame);
  ASSERT_TRUE(opened.ok());
  EXPECT_EQ(*opened, pt);
}

TEST(WireTest, EncodeDecodeAndLimits) {
  Bytes payload = {1, 2, 3};
  Bytes wire = EncodeMessage(MsgType::kFrame, payload);
  EXPECT_EQ(ToHex(wire), "0400000010010203");
  auto msg = DecodeMessage(wire);
  ASSERT_TRUE(msg.ok());
  EXPECT_EQ(msg->type, MsgType::kFrame);
  EXPECT_EQ(msg->payload, payload);

  Bytes trailing = wire;
  trailing.push_back(0);
  EXPECT_FALSE(DecodeMessage(trailing).ok());
  EXPECT_FALSE(DecodeMessage(ByteView(wire).first(5)).ok());
  Bytes zero_len = {0, 0, 0, 0};
  EXPECT_FALSE(DecodeLengthPrefix(zero_len).ok());
  Bytes too_big = {0x01, 0x00, 0x10, 0x00};  // 1 MiB + 1
  EXPECT_FALSE(DecodeLengthPrefix(too_big).ok());
  Bytes max_ok = {0x00, 0x00, 0x10, 0x00};
  EXPECT_EQ(*DecodeLengthPrefix(max_ok), kMaxMessageBytes);
  Bytes unknown_type = {1, 0, 0, 0, 0x7f};
  EXPECT_FALSE(DecodeMessage(unknown_type).ok());
}

// Two sessions with fresh keys, wired back to back.
struct KeyPair {
  SessionKeys client;
  SessionKeys server;
};

KeyPair FreshKeys() {
  auto key = PlatformKey::Generate("p");
  Measurement m;
  m.bytes.fill(7);
  auto client = ClientHandshake::Start();
  auto resp = ServerRespond(client.hello(), m, key, crypto::KexKeyPair::Generate());
  TrustStore store;
  store.AddPlatformKey("p", key.signing_key.public_key());
  store.AddExpectedMeasurement(m);
  return {*client.Finish(resp->attest, store), resp->keys};
}

TEST(SessionTest, EmptyAndLargePlaintextRoundTrip) {
  auto k = FreshKeys();
  for (size_t n : {size_t{0}, size_t{1}, size_t{4096}}) {
    Bytes pt(n, 0x5a);
    auto f = Seal(k.client, Direction::kClientToServer, pt);
    ASSERT_TRUE(f.ok());
    EXPECT_EQ(f->ciphertext.size(), n + crypto::kAeadTagBytes);
    auto out = Open(k.server, Direction::kClientToServer, *f);
    ASSERT_TRUE(out.ok());
    EXPECT_EQ(*out, pt);
  }
}

TEST(SessionTest, SealRejectsInboundDirection) {
  auto k = FreshKeys();
  EXPECT_FALSE(Seal(k.client, Direction::kServerToClient, Bytes{1}).ok());
}

TEST(SessionTest, ReplayIsDetected) {
  auto k = FreshKeys();
  auto f0 = *Seal(k.client, Direction::kClientToServer, Bytes{1});
  auto f1 = *Seal(k.client, Direction::kClientToServer, Bytes{2});
  ASSERT_TRUE(Open(k.server, Direction::kClientToServer, f0).ok());
  ASSERT_TRUE(Open(k.server, Direction::kClientToServer, f1).ok());
  EXPECT_EQ(Open(k.server, Direction::kClientToServer, f0).code(), Errc::kReplayDetected);
  EXPECT_EQ(Open(k.server, Direction::kClientToServer, f1).code(), Errc::kReplayDetected);
}

TEST(SessionTest, SkippedFrameIsGap) {
  auto k = FreshKeys();
  (void)*Seal(k.client, Direction::kClientToServer, Bytes{1});
  auto f1 = *Seal(k.client, Direction::kClientToServer, Bytes{2});
  EXPECT_EQ(Open(k.server, Direction::kClientToServer, f1).code(), Errc::kSequenceGap);
}

TEST(SessionTest, ReflectedFrameFailsAuthentication) {
  auto k = FreshKeys();
  auto f = *Seal(k.client, Direction::kClientToServer, Bytes{1, 2});
  // The client's own frame fed back to it as if from the server.
  EXPECT_EQ(Open(k.client, Direction::kServerToClient, f).code(), Errc::kAuthFailure);
}

TEST(SessionTest, KeysFromAnotherSessionFail) {
  auto a = FreshKeys();
  auto b = FreshKeys();
  auto f = *Seal(a.client, Direction::kClientToServer, Bytes{9});
  EXPECT_EQ(Open(b.server, Direction::kClientToServer, f).code(), Errc::kAuthFailure);
}

TEST(SessionTest, EveryBitFlipOfAFrameIsRejected) {
  auto k = FreshKeys();
  testing::Gen gen(2024);
  auto frame = *Seal(k.client, Direction::kClientToServer, ToBytes("shot 566 90"));
  Bytes payload = frame.EncodePayload();
  for (int trial = 0; trial < 1000; ++trial) {
    Bytes mutated = payload;
    size_t bit = static_cast<size_t>(gen.Int(0, static_cast<int64_t>(mutated.size() * 8) - 1));
    mutated[bit / 8] ^= static_cast<uint8_t>(1u << (bit % 8));
    auto decoded = Frame::DecodePayload(mutated);
    ASSERT_TRUE(decoded.ok());
    SessionKeys server = k.server;
    EXPECT_EQ(Open(server, Direction::kClientToServer, *decoded).code(), Errc::kAuthFailure)
        << "bit " << bit;
  }
  EXPECT_TRUE(Open(k.server, Direction::kClientToServer, frame).ok());
}

TEST(SessionTest, CounterExhaustionRefusesToWrap) {
  auto k = FreshKeys();
  k.client.send_seq = kMaxSeq;
  EXPECT_EQ(Seal(k.client, Direction::kClientToServer, Bytes{1}).code(),
            Errc::kSequenceOverflow);
  EXPECT_EQ(k.client.send_seq, kMaxSeq);

  k.client.send_seq = kMaxSeq - 1;
  k.server.recv_seq = kMaxSeq - 1;
  auto last = Seal(k.client, Direction::kClientToServer, Bytes{1});
  ASSERT_TRUE(last.ok());
  EXPECT_TRUE(Open(k.server, Direction::kClientToServer, *last).ok());
  EXPECT_EQ(Seal(k.client, Direction::kClientToServer, Bytes{1}).code(),
            Errc::kSequenceOverflow);
}

class HandshakeTest : public ::testing::Test {
 protected:
  void SetUp() override {
    auto manifest = enclave::LoadManifest(FixturePath("manifest-a.json"));
    ASSERT_TRUE(manifest.ok());
    manifest_ = *manifest;
    measurement_ = *enclave::Measure(manifest_);
    store_.AddPlatformKey(key_.key_id, key_.signing_key.public_key());
    store_.AddExpectedMeasurement(measurement_);
  }

  enclave::ComponentManifest manifest_;
  Measurement measurement_;
  PlatformKey key_ = PlatformKey::Generate("platform-1");
  TrustStore store_;
};

TEST_F(HandshakeTest, SubstitutedServerKeyAborts) {
  auto client = ClientHandshake::Start();
  auto resp = ServerRespond(client.hello(), manifest_, key_);
  ASSERT_TRUE(resp.ok());
  ServerAttest forged = resp->attest;
  forged.server_eph_pub = crypto::KexKeyPair::Generate().public_key;
  auto keys = client.Finish(forged, store_);
  EXPECT_EQ(keys.code(), Errc::kHandshakeAborted);
  EXPECT_EQ(keys.error().root(), Errc::kReportMismatch);
}

TEST_F(HandshakeTest, ReplayedAttestForOldNonceAborts) {
  auto first = ClientHandshake::Start();
  auto old = ServerRespond(first.hello(), manifest_, key_);
  auto second = ClientHandshake::Start();
  auto keys = second.Finish(old->attest, store_);
  EXPECT_EQ(keys.code(), Errc::kHandshakeAborted);
  EXPECT_EQ(keys.error().root(), Errc::kReportMismatch);
}

TEST_F(HandshakeTest, DistinctSessionsGetDistinctKeys) {
  auto a = ClientHandshake::Start();
  auto b = ClientHandshake::Start();
  auto ra = ServerRespond(a.hello(), manifest_, key_);
  auto rb = ServerRespond(b.hello(), manifest_, key_);
  EXPECT_NE(ra->keys.key_c2s, rb->keys.key_c2s);
  EXPECT_NE(ra->keys.transcript_hash, rb->keys.transcript_hash);
}

// Runs Connect against Accept over an in-memory pair, capturing everything
// the client puts on the wire.
struct Connected {
  Result<std::unique_ptr<SecureChannel>> client;
  Result<std::unique_ptr<SecureChannel>> server;
  // Every wire message the client sent. Outlives the transport, which a
  // failed Connect destroys.
  std::shared_ptr<std::vector<Bytes>> client_sent;
};

Connected ConnectPair(const TrustStore& store, const Measurement& served,
                      const PlatformKey& key) {
  auto [c, s] = MemoryTransport::CreatePair();
  auto sent = std::make_shared<std::vector<Bytes>>();
  auto capture = std::make_unique<CapturingTransport>(
      std::move(c), [sent](ByteView m) { sent->emplace_back(m.begin(), m.end()); });
  Result<std::unique_ptr<SecureChannel>> server =
      MakeError(Errc::kConnectionClosed, "not run");
  std::thread t([&, st = std::move(s)]() mutable {
    server = SecureChannel::Accept(std::move(st), served, key);
  });
  auto client = SecureChannel::Connect(std::move(capture), store);
  t.join();
  return {std::move(client), std::move(server), sent};
}

TEST_F(HandshakeTest, EndToEndChannelCarriesBothDirections) {
  auto conn = ConnectPair(store_, measurement_, key_);
  ASSERT_TRUE(conn.client.ok()) << conn.client.error().ToString();
  ASSERT_TRUE(conn.server.ok());
  auto& client = **conn.client;
  auto& server = **conn.server;
  EXPECT_EQ(client.transcript_hash(), server.transcript_hash());
  ASSERT_TRUE(client.Send(ToBytes("ping")).ok());
  EXPECT_EQ(*server.Receive(), ToBytes("ping"));
  ASSERT_TRUE(server.Send(ToBytes("pong")).ok());
  EXPECT_EQ(*client.Receive(), ToBytes("pong"));
  client.Close();
  EXPECT_EQ(server.Receive().code(), Errc::kConnectionClosed);
}

TEST_F(HandshakeTest, TamperedManifestSendsNoApplicationBytes) {
  testing::Gen gen(55);
  for (int trial = 0; trial < 20; ++trial) {
    auto tampered = testing::TamperOneByte(manifest_, gen);
    auto conn = ConnectPair(store_, *enclave::Measure(tampered), key_);
    ASSERT_FALSE(conn.client.ok());
    EXPECT_EQ(conn.client.code(), Errc::kHandshakeAborted);
    EXPECT_EQ(conn.client.error().root(), Errc::kUnknownMeasurement);
    // Only the hello went out; no application frame.
    ASSERT_EQ(conn.client_sent->size(), 1u);
    EXPECT_EQ((*conn.client_sent)[0][4], static_cast<uint8_t>(MsgType::kClientHello));
  }
}

TEST_F(HandshakeTest, ServerRejectsFrameBeforeHello) {
  auto [c, s] = MemoryTransport::CreatePair();
  Frame junk{0, Bytes(20, 1)};
  ASSERT_TRUE(c->Send(junk.ToWire()).ok());
  auto server = SecureChannel::Accept(std::move(s), measurement_, key_);
  EXPECT_FALSE(server.ok());
}

}  // namespace
}  // namespace zkg::channel

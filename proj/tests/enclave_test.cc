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

#include <set>

#include "support/generators.h"
#include "support/test_paths.h"
#include "zkg/base/io.h"
#include "zkg/enclave/attestation.h"
#include "zkg/enclave/manifest.h"

namespace zkg::enclave {
namespace {

using testing::FixturePath;
using testing::Gen;

ComponentManifest FixtureManifest() {
  auto m = LoadManifest(FixturePath("manifest-a.json"));
  EXPECT_TRUE(m.ok()) << m.error().ToString();
  return *m;
}

TEST(CanonicalEncodeTest, MatchesGoldenFile) {
  auto golden = ReadFileBytes(FixturePath("manifest-a.canonical.bin"));
  ASSERT_TRUE(golden.ok());
  auto encoded = CanonicalEncode(FixtureManifest());
  ASSERT_TRUE(encoded.ok());
  EXPECT_EQ(*encoded, *golden);
}

TEST(CanonicalEncodeTest, DeterministicAndIndependentOfSetOrder) {
  auto a = FixtureManifest();
  auto b = LoadManifest(FixturePath("manifest-a-reordered.json"));
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(*CanonicalEncode(a), *CanonicalEncode(a));
  EXPECT_EQ(*CanonicalEncode(a), *CanonicalEncode(*b));
}

TEST(CanonicalEncodeTest, RejectsInvalidManifests) {
  auto m = FixtureManifest();
  m.component_id = "";
  EXPECT_EQ(CanonicalEncode(m).code(), Errc::kInvalidManifest);
  m.component_id = std::string(65, 'a');
  EXPECT_EQ(CanonicalEncode(m).code(), Errc::kInvalidManifest);
  m.component_id = "has space";
  EXPECT_EQ(CanonicalEncode(m).code(), Errc::kInvalidManifest);
  m.component_id = std::string(64, 'a');
  EXPECT_TRUE(CanonicalEncode(m).ok());

  auto bad_decl = FixtureManifest();
  bad_decl.declassifiers[0].output_label = policy::DataLabel::kRawInput;
  EXPECT_EQ(Measure(bad_decl).code(), Errc::kInvalidManifest);
  bad_decl = FixtureManifest();
  bad_decl.declassifiers[1].k = 1;
  EXPECT_EQ(Measure(bad_decl).code(), Errc::kInvalidManifest);
  bad_decl = FixtureManifest();
  bad_decl.declassifiers[1].input_label = policy::DataLabel::kAggregate;
  EXPECT_EQ(Measure(bad_decl).code(), Errc::kInvalidManifest);
}

TEST(MeasureTest, MatchesGoldenHex) {
  auto golden = ReadFileText(FixturePath("manifest-a.measurement.txt"));
  ASSERT_TRUE(golden.ok());
  std::string hex = *golden;
  while (!hex.empty() && (hex.back() == '\n' || hex.back() == ' ')) hex.pop_back();
  EXPECT_EQ(Measure(FixtureManifest())->ToHex(), hex);
}

TEST(MeasureTest, CodeDigestBitFlipChangesMeasurement) {
  auto m = FixtureManifest();
  auto before = *Measure(m);
  (*m.code_digest)[7] ^= 0x10;
  EXPECT_NE(*Measure(m), before);
}

TEST(MeasureTest, AbsentDigestDiffersFromPresent) {
  auto m = FixtureManifest();
  auto before = *Measure(m);
  m.code_digest.reset();
  EXPECT_NE(*Measure(m), before);
}

TEST(MeasureTest, PureOverManyRandomManifests) {
  Gen gen(0x5eed);
  for (int i = 0; i < 10000; ++i) {
    auto m = gen.Manifest();
    auto a = Measure(m);
    auto b = Measure(m);
    ASSERT_TRUE(a.ok()) << a.error().ToString();
    ASSERT_EQ(*a, *b);
  }
}

TEST(MeasureTest, DistinctRandomManifestsGetDistinctMeasurements) {
  Gen gen(42);
  std::set<Measurement> seen;
  int distinct_manifests = 0;
  std::vector<ComponentManifest> all;
  for (int i = 0; i < 2000; ++i) {
    auto m = gen.Manifest();
    if (std::find(all.begin(), all.end(), m) != all.end()) continue;
    all.push_back(m);
    ++distinct_manifests;
    seen.insert(*Measure(m));
  }
  EXPECT_EQ(seen.size(), static_cast<size_t>(distinct_manifests));
}

TEST(ManifestJsonTest, RoundTripsAndRejectsUnknownFields) {
  auto m = FixtureManifest();
  auto back = ManifestFromJson(ManifestToJson(m));
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(*back, m);

  auto j = ManifestToJson(m);
  j["extra"] = 1;
  EXPECT_EQ(ManifestFromJson(j).code(), Errc::kInvalidManifest);
  j = ManifestToJson(m);
  j.erase("egress_sinks");
  EXPECT_EQ(ManifestFromJson(j).code(), Errc::kInvalidManifest);
  j = ManifestToJson(m);
  j["code_digest"] = "ABCD";
  EXPECT_EQ(ManifestFromJson(j).code(), Errc::kInvalidManifest);
  j = ManifestToJson(m);
  j["input_labels"].push_back("Secret");
  EXPECT_EQ(ManifestFromJson(j).code(), Errc::kInvalidManifest);
}

TEST(ManifestJsonTest, MissingFileIsIoError) {
  EXPECT_EQ(LoadManifest(FixturePath("does-not-exist.json")).code(), Errc::kIoError);
}

class QuoteTest : public ::testing::Test {
 protected:
  void SetUp() override {
    measurement_ = *Measure(FixtureManifest());
    store_.AddPlatformKey(key_.key_id, key_.signing_key.public_key());
    store_.AddExpectedMeasurement(measurement_);
    report_.fill(0xab);
  }

  PlatformKey key_ = PlatformKey::Generate("platform-1");
  Measurement measurement_;
  TrustStore store_;
  ReportData report_{};
};

TEST_F(QuoteTest, HonestQuoteVerifies) {
  auto quote = GenerateQuote(key_, measurement_, report_);
  auto id = VerifyQuote(store_, quote, report_);
  ASSERT_TRUE(id.ok()) << id.error().ToString();
  EXPECT_EQ(id->measurement, measurement_);
}

TEST_F(QuoteTest, AlteredReportDataBreaksSignature) {
  auto quote = GenerateQuote(key_, measurement_, report_);
  quote.report_data[0] ^= 1;
  EXPECT_EQ(VerifyQuote(store_, quote, quote.report_data).code(), Errc::kBadSignature);
}

TEST_F(QuoteTest, UnknownKeyIsRejected) {
  auto other = PlatformKey::Generate("platform-2");
  auto quote = GenerateQuote(other, measurement_, report_);
  EXPECT_EQ(VerifyQuote(store_, quote, report_).code(), Errc::kUnknownPlatformKey);
}

TEST_F(QuoteTest, StaleQuoteWithFreshNonceIsReportMismatch) {
  auto quote = GenerateQuote(key_, measurement_, report_);
  ReportData fresh{};
  fresh.fill(0xcd);
  EXPECT_EQ(VerifyQuote(store_, quote, fresh).code(), Errc::kReportMismatch);
}

TEST_F(QuoteTest, EmptyStoreRejects) {
  auto quote = GenerateQuote(key_, measurement_, report_);
  EXPECT_EQ(VerifyQuote(TrustStore{}, quote, report_).code(), Errc::kUnknownPlatformKey);
}

// Fault injection over all 16 combinations of the four acceptance
// conditions. The first failing condition, in order a..d, names the error.
TEST_F(QuoteTest, AcceptsIffAllFourConditionsHold) {
  auto stranger = PlatformKey::Generate("platform-1");  // same id, wrong key
  for (int mask = 0; mask < 16; ++mask) {
    const bool key_known = mask & 1;
    const bool sig_valid = mask & 2;
    const bool meas_expected = mask & 4;
    const bool report_matches = mask & 8;

    Measurement m = measurement_;
    if (!meas_expected) m.bytes[0] ^= 0xff;
    auto quote = GenerateQuote(sig_valid ? key_ : stranger, m, report_);
    if (!key_known) quote.platform_key_id = "nobody";
    ReportData expected = report_;
    if (!report_matches) expected[31] ^= 1;

    auto result = VerifyQuote(store_, quote, expected);
    Errc want = !key_known        ? Errc::kUnknownPlatformKey
                : !sig_valid      ? Errc::kBadSignature
                : !meas_expected  ? Errc::kUnknownMeasurement
                : !report_matches ? Errc::kReportMismatch
                                  : Errc::kOk;
    EXPECT_EQ(result.code(), want) << "mask=" << mask;
  }
}

TEST_F(QuoteTest, SingleByteManifestTamperIsUnknownMeasurement) {
  Gen gen(100);
  auto manifest = FixtureManifest();
  for (int trial = 0; trial < 100; ++trial) {
    auto tampered = testing::TamperOneByte(manifest, gen);
    auto m = Measure(tampered);
    ASSERT_TRUE(m.ok());
    auto quote = GenerateQuote(key_, *m, report_);
    EXPECT_EQ(VerifyQuote(store_, quote, report_).code(), Errc::kUnknownMeasurement)
        << "trial " << trial;
  }
}

TEST_F(QuoteTest, QuoteCodecRoundTrip) {
  auto quote = GenerateQuote(key_, measurement_, report_);
  auto back = AttestationQuote::Decode(quote.Encode());
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(*back, quote);
  Bytes truncated = quote.Encode();
  truncated.pop_back();
  EXPECT_FALSE(AttestationQuote::Decode(truncated).ok());
}

TEST(TrustStoreTest, SerializationIsBitExactRoundTrip) {
  TrustStore store;
  store.AddPlatformKey("b-key", PlatformKey::Generate("b").signing_key.public_key());
  store.AddPlatformKey("a-key", PlatformKey::Generate("a").signing_key.public_key());
  Gen gen(7);
  for (int i = 0; i < 3; ++i) store.AddExpectedMeasurement(*Measure(gen.Manifest()));

  std::string text = store.Serialize();
  auto parsed = TrustStore::Parse(text);
  ASSERT_TRUE(parsed.ok());
  EXPECT_EQ(*parsed, store);
  EXPECT_EQ(parsed->Serialize(), text);
}

TEST(TrustStoreTest, RejectsMalformedInput) {
  EXPECT_EQ(TrustStore::Parse("{").code(), Errc::kParseError);
  EXPECT_FALSE(TrustStore::Parse(R"({"platform_keys": {"k": "00"},
                                     "expected_measurements": []})")
                   .ok());
  EXPECT_FALSE(TrustStore::Parse(R"({"platform_keys": {}})").ok());
}

TEST(PlatformKeyTest, JsonRoundTripKeepsPublicKey) {
  auto key = PlatformKey::Generate("p");
  auto back = PlatformKeyFromJson(PlatformKeyToJson(key));
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(back->key_id, "p");
  EXPECT_EQ(back->signing_key.public_key(), key.signing_key.public_key());
}

}  // namespace
}  // namespace zkg::enclave

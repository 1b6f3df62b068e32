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

#include "zkg/enclave/attestation.h"

#include "zkg/base/io.h"

namespace zkg::enclave {

using nlohmann::json;

PlatformKey PlatformKey::FromSeed(std::string key_id, const crypto::Seed& seed) {
  return PlatformKey{std::move(key_id), crypto::SigningKey::FromSeed(seed)};
}

PlatformKey PlatformKey::Generate(std::string key_id) {
  return PlatformKey{std::move(key_id), crypto::SigningKey::Generate()};
}

Result<PlatformKey> PlatformKeyFromJson(const json& j) {
  ZKG_RETURN_IF_ERROR(ExpectKeys(j, {"key_id", "seed"}, {}, "platform key"));
  if (!j["key_id"].is_string() || !j["seed"].is_string()) {
    return MakeError(Errc::kParseError, "platform key fields must be strings");
  }
  std::string key_id = j["key_id"].get<std::string>();
  if (key_id.empty()) {
    return MakeError(Errc::kParseError, "platform key_id must be non-empty");
  }
  ZKG_ASSIGN_OR_RETURN(crypto::Seed seed,
                       FromHexFixed<crypto::kSeedBytes>(j["seed"].get<std::string>()));
  return PlatformKey::FromSeed(std::move(key_id), seed);
}

json PlatformKeyToJson(const PlatformKey& key) {
  return json{{"key_id", key.key_id}, {"seed", ToHex(key.signing_key.seed())}};
}

Result<PlatformKey> LoadPlatformKey(const std::filesystem::path& path) {
  ZKG_ASSIGN_OR_RETURN(json j, ReadJsonFile(path));
  return PlatformKeyFromJson(j);
}

Bytes AttestationQuote::Encode() const {
  ByteWriter w;
  w.Raw(measurement.bytes).Raw(report_data).Prefixed(platform_key_id).Prefixed(
      platform_signature);
  return std::move(w).Take();
}

Result<AttestationQuote> AttestationQuote::Read(ByteReader& reader) {
  AttestationQuote q;
  ZKG_ASSIGN_OR_RETURN(q.measurement.bytes, reader.Fixed<32>());
  ZKG_ASSIGN_OR_RETURN(q.report_data, reader.Fixed<32>());
  ZKG_ASSIGN_OR_RETURN(ByteView key_id, reader.Prefixed());
  if (key_id.size() > 256) {
    return MakeError(Errc::kProtocolError, "platform key id too long");
  }
  q.platform_key_id.assign(key_id.begin(), key_id.end());
  ZKG_ASSIGN_OR_RETURN(ByteView sig, reader.Prefixed());
  if (sig.size() != crypto::kSignatureBytes) {
    return MakeError(Errc::kProtocolError, "signature has wrong length");
  }
  std::copy(sig.begin(), sig.end(), q.platform_signature.begin());
  return q;
}

Result<AttestationQuote> AttestationQuote::Decode(ByteView bytes) {
  ByteReader reader(bytes);
  ZKG_ASSIGN_OR_RETURN(AttestationQuote q, Read(reader));
  ZKG_RETURN_IF_ERROR(reader.ExpectEnd());
  return q;
}

Bytes QuoteSignedBytes(const Measurement& measurement, const ReportData& report_data) {
  Bytes out(measurement.bytes.begin(), measurement.bytes.end());
  out.insert(out.end(), report_data.begin(), report_data.end());
  return out;
}

AttestationQuote GenerateQuote(const PlatformKey& platform_key,
                               const Measurement& measurement,
                               const ReportData& report_data) {
  AttestationQuote q;
  q.measurement = measurement;
  q.report_data = report_data;
  q.platform_key_id = platform_key.key_id;
  q.platform_signature =
      platform_key.signing_key.Sign(QuoteSignedBytes(measurement, report_data));
  return q;
}

void TrustStore::AddPlatformKey(std::string key_id, const crypto::SignPublicKey& key) {
  platform_keys_[std::move(key_id)] = key;
}

void TrustStore::AddExpectedMeasurement(const Measurement& m) {
  expected_measurements_.insert(m);
}

Result<TrustStore> TrustStore::FromJson(const json& j) {
  ZKG_RETURN_IF_ERROR(
      ExpectKeys(j, {"platform_keys", "expected_measurements"}, {}, "trust store"));
  if (!j["platform_keys"].is_object() || !j["expected_measurements"].is_array()) {
    return MakeError(Errc::kParseError,
                     "trust store needs an object of platform_keys and an array of "
                     "expected_measurements");
  }
  TrustStore store;
  for (const auto& [key_id, hex] : j["platform_keys"].items()) {
    if (!hex.is_string()) {
      return MakeError(Errc::kParseError, "platform key must be a hex string");
    }
    ZKG_ASSIGN_OR_RETURN(auto key,
                         FromHexFixed<crypto::kSignPublicKeyBytes>(hex.get<std::string>()));
    store.AddPlatformKey(key_id, key);
  }
  for (const auto& hex : j["expected_measurements"]) {
    if (!hex.is_string()) {
      return MakeError(Errc::kParseError, "measurement must be a hex string");
    }
    ZKG_ASSIGN_OR_RETURN(Measurement m, Measurement::FromHex(hex.get<std::string>()));
    store.AddExpectedMeasurement(m);
  }
  return store;
}

json TrustStore::ToJson() const {
  json keys = json::object();
  for (const auto& [id, key] : platform_keys_) keys[id] = ToHex(key);
  json measurements = json::array();
  for (const auto& m : expected_measurements_) measurements.push_back(m.ToHex());
  return json{{"platform_keys", keys}, {"expected_measurements", measurements}};
}

std::string TrustStore::Serialize() const { return ToJson().dump(2) + "\n"; }

Result<TrustStore> TrustStore::Parse(std::string_view text) {
  ZKG_ASSIGN_OR_RETURN(json j, ParseJson(text));
  return FromJson(j);
}

Result<TrustStore> TrustStore::Load(const std::filesystem::path& path) {
  ZKG_ASSIGN_OR_RETURN(json j, ReadJsonFile(path));
  return FromJson(j);
}

Result<VerifiedIdentity> VerifyQuote(const TrustStore& store,
                                     const AttestationQuote& quote,
                                     const ReportData& expected_report_data) {
  auto key = store.platform_keys().find(quote.platform_key_id);
  if (key == store.platform_keys().end()) {
    return MakeError(Errc::kUnknownPlatformKey,
                     "platform key '" + quote.platform_key_id + "' is not trusted");
  }
  if (!crypto::VerifySignature(key->second,
                               QuoteSignedBytes(quote.measurement, quote.report_data),
                               quote.platform_signature)) {
    return MakeError(Errc::kBadSignature, "quote signature does not verify");
  }
  if (!store.expected_measurements().contains(quote.measurement)) {
    return MakeError(Errc::kUnknownMeasurement,
                     "measurement " + quote.measurement.ToHex() + " is not expected");
  }
  if (!crypto::ConstantTimeEqual(quote.report_data, expected_report_data)) {
    return MakeError(Errc::kReportMismatch, "report_data does not bind this handshake");
  }
  return VerifiedIdentity{quote.measurement};
}

}  // namespace zkg::enclave

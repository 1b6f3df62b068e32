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

// Software-simulated trusted platform. A platform signing key stands in for
// the hardware root of trust: a quote is that key's signature over
// (measurement || report_data).

#ifndef ZKG_ENCLAVE_ATTESTATION_H_
#define ZKG_ENCLAVE_ATTESTATION_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>

#include "json.hpp"
#include "zkg/base/bytes.h"
#include "zkg/base/crypto.h"
#include "zkg/base/result.h"
#include "zkg/enclave/manifest.h"

namespace zkg::enclave {

using ReportData = Digest;

struct PlatformKey {
  std::string key_id;
  crypto::SigningKey signing_key;

  static PlatformKey FromSeed(std::string key_id, const crypto::Seed& seed);
  static PlatformKey Generate(std::string key_id);
};

// {"key_id": "...", "seed": "<64 hex>"}
Result<PlatformKey> PlatformKeyFromJson(const nlohmann::json& j);
nlohmann::json PlatformKeyToJson(const PlatformKey& key);
Result<PlatformKey> LoadPlatformKey(const std::filesystem::path& path);

struct AttestationQuote {
  Measurement measurement;
  ReportData report_data{};
  crypto::Signature platform_signature{};
  std::string platform_key_id;

  // measurement(32) | report_data(32) | key_id (u32-prefixed) | signature (u32-prefixed)
  Bytes Encode() const;
  static Result<AttestationQuote> Decode(ByteView bytes);
  // Reads a quote from the front of `reader`.
  static Result<AttestationQuote> Read(ByteReader& reader);

  friend bool operator==(const AttestationQuote&, const AttestationQuote&) = default;
};

// The signed statement: measurement || report_data.
Bytes QuoteSignedBytes(const Measurement& measurement, const ReportData& report_data);

AttestationQuote GenerateQuote(const PlatformKey& platform_key,
                               const Measurement& measurement,
                               const ReportData& report_data);

class TrustStore {
 public:
  TrustStore() = default;

  void AddPlatformKey(std::string key_id, const crypto::SignPublicKey& key);
  void AddExpectedMeasurement(const Measurement& m);

  const std::map<std::string, crypto::SignPublicKey>& platform_keys() const {
    return platform_keys_;
  }
  const std::set<Measurement>& expected_measurements() const {
    return expected_measurements_;
  }
  bool empty() const { return platform_keys_.empty() || expected_measurements_.empty(); }

  // {"platform_keys": {"<key_id>": "<hex>"}, "expected_measurements": ["<hex>", ...]}
  static Result<TrustStore> FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
  // Canonical text: two-space indented JSON with sorted keys and sorted
  // measurements, newline-terminated. Parse(Serialize(s)) == s and
  // Serialize(Parse(t)) == t for any t produced by Serialize.
  std::string Serialize() const;
  static Result<TrustStore> Parse(std::string_view text);
  static Result<TrustStore> Load(const std::filesystem::path& path);

  friend bool operator==(const TrustStore&, const TrustStore&) = default;

 private:
  std::map<std::string, crypto::SignPublicKey> platform_keys_;
  std::set<Measurement> expected_measurements_;
};

struct VerifiedIdentity {
  Measurement measurement;
};

// Accepts iff (a) the key id is in the store, (b) the signature verifies,
// (c) the measurement is expected, (d) report_data matches. Failures are
// reported in that order: UnknownPlatformKey, BadSignature,
// UnknownMeasurement, ReportMismatch.
Result<VerifiedIdentity> VerifyQuote(const TrustStore& store,
                                     const AttestationQuote& quote,
                                     const ReportData& expected_report_data);

}  // namespace zkg::enclave

#endif  // ZKG_ENCLAVE_ATTESTATION_H_

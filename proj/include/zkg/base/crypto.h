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

// Thin wrappers over libsodium. Every primitive the protocol depends on is
// reachable from here and nowhere else, so the suite below is the single
// place that pins what golden files were produced with.

#ifndef ZKG_BASE_CRYPTO_H_
#define ZKG_BASE_CRYPTO_H_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>

#include "zkg/base/bytes.h"
#include "zkg/base/result.h"

namespace zkg::crypto {

// Protocol version 1 primitive suite. Changing any primitive invalidates
// every golden measurement, transcript hash and audit file.
inline constexpr std::string_view kCryptoSuite =
    "zkg-v1:sha256:ed25519:x25519:hkdf-sha256:chacha20poly1305-ietf:hmac-sha256";

inline constexpr size_t kHashBytes = 32;
inline constexpr size_t kSignatureBytes = 64;
inline constexpr size_t kSignPublicKeyBytes = 32;
inline constexpr size_t kSeedBytes = 32;
inline constexpr size_t kKexBytes = 32;
inline constexpr size_t kAeadKeyBytes = 32;
inline constexpr size_t kAeadTagBytes = 16;

using Signature = std::array<uint8_t, kSignatureBytes>;
using SignPublicKey = std::array<uint8_t, kSignPublicKeyBytes>;
using Seed = std::array<uint8_t, kSeedBytes>;
using KexPublicKey = std::array<uint8_t, kKexBytes>;
using KexSecretKey = std::array<uint8_t, kKexBytes>;
using AeadKey = std::array<uint8_t, kAeadKeyBytes>;

// Initializes libsodium once; every function below calls it.
void EnsureInitialized();

Digest Sha256(ByteView data);
// Hash of the concatenation of all parts.
Digest Sha256Concat(std::initializer_list<ByteView> parts);
Digest HmacSha256(ByteView key, ByteView data);
// RFC 5869 HKDF-SHA256 producing a single 32-byte block.
std::array<uint8_t, 32> HkdfSha256(ByteView ikm, ByteView salt,
                                   std::string_view info);

void RandomFill(std::span<uint8_t> out);
template <size_t N>
std::array<uint8_t, N> RandomArray() {
  std::array<uint8_t, N> out{};
  RandomFill(out);
  return out;
}

bool ConstantTimeEqual(ByteView a, ByteView b);

// Ed25519 signing key derived from a 32-byte seed.
class SigningKey {
 public:
  static SigningKey FromSeed(const Seed& seed);
  static SigningKey Generate();

  const SignPublicKey& public_key() const { return public_key_; }
  const Seed& seed() const { return seed_; }
  Signature Sign(ByteView message) const;

 private:
  Seed seed_{};
  SignPublicKey public_key_{};
  std::array<uint8_t, 64> secret_key_{};
};

bool VerifySignature(const SignPublicKey& key, ByteView message,
                     const Signature& signature);

// X25519 key pair for the one-shot handshake.
struct KexKeyPair {
  KexSecretKey secret{};
  KexPublicKey public_key{};

  static KexKeyPair Generate();
  static KexKeyPair FromSecret(const KexSecretKey& secret);
};

// Shared secret; fails with kProtocolError for low-order peer points.
Result<std::array<uint8_t, 32>> KeyAgreement(const KexSecretKey& secret,
                                             const KexPublicKey& peer);

// ChaCha20-Poly1305 (IETF) with a 96-bit nonce of 4 zero bytes || counter LE.
Bytes AeadSeal(const AeadKey& key, uint64_t counter, ByteView associated_data,
               ByteView plaintext);
Result<Bytes> AeadOpen(const AeadKey& key, uint64_t counter,
                       ByteView associated_data, ByteView ciphertext);

}  // namespace zkg::crypto

#endif  // ZKG_BASE_CRYPTO_H_

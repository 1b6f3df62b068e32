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

#include "zkg/base/crypto.h"

#include <sodium.h>

#include <cstdlib>
#include <cstring>
#include <mutex>

namespace zkg::crypto {

void EnsureInitialized() {
  static std::once_flag once;
  std::call_once(once, [] {
    if (sodium_init() < 0) {
      std::abort();
    }
  });
}

Digest Sha256(ByteView data) {
  EnsureInitialized();
  Digest out{};
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

Digest Sha256Concat(std::initializer_list<ByteView> parts) {
  EnsureInitialized();
  crypto_hash_sha256_state state;
  crypto_hash_sha256_init(&state);
  for (ByteView part : parts) {
    crypto_hash_sha256_update(&state, part.data(), part.size());
  }
  Digest out{};
  crypto_hash_sha256_final(&state, out.data());
  return out;
}

Digest HmacSha256(ByteView key, ByteView data) {
  EnsureInitialized();
  crypto_auth_hmacsha256_state state;
  crypto_auth_hmacsha256_init(&state, key.data(), key.size());
  crypto_auth_hmacsha256_update(&state, data.data(), data.size());
  Digest out{};
  crypto_auth_hmacsha256_final(&state, out.data());
  return out;
}

std::array<uint8_t, 32> HkdfSha256(ByteView ikm, ByteView salt,
                                   std::string_view info) {
  // Extract: PRK = HMAC(salt, IKM). Expand, one block: T(1) = HMAC(PRK, info || 0x01).
  Digest prk = HmacSha256(salt, ikm);
  Bytes block(info.begin(), info.end());
  block.push_back(0x01);
  Digest okm = HmacSha256(prk, block);
  sodium_memzero(prk.data(), prk.size());
  return okm;
}

void RandomFill(std::span<uint8_t> out) {
  EnsureInitialized();
  randombytes_buf(out.data(), out.size());
}

bool ConstantTimeEqual(ByteView a, ByteView b) {
  EnsureInitialized();
  if (a.size() != b.size()) return false;
  return sodium_memcmp(a.data(), b.data(), a.size()) == 0;
}

SigningKey SigningKey::FromSeed(const Seed& seed) {
  EnsureInitialized();
  SigningKey key;
  key.seed_ = seed;
  crypto_sign_seed_keypair(key.public_key_.data(), key.secret_key_.data(),
                           seed.data());
  return key;
}

SigningKey SigningKey::Generate() { return FromSeed(RandomArray<kSeedBytes>()); }

Signature SigningKey::Sign(ByteView message) const {
  Signature sig{};
  crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(),
                       secret_key_.data());
  return sig;
}

bool VerifySignature(const SignPublicKey& key, ByteView message,
                     const Signature& signature) {
  EnsureInitialized();
  return crypto_sign_verify_detached(signature.data(), message.data(),
                                     message.size(), key.data()) == 0;
}

KexKeyPair KexKeyPair::Generate() {
  return FromSecret(RandomArray<kKexBytes>());
}

KexKeyPair KexKeyPair::FromSecret(const KexSecretKey& secret) {
  EnsureInitialized();
  KexKeyPair pair;
  pair.secret = secret;
  crypto_scalarmult_curve25519_base(pair.public_key.data(), secret.data());
  return pair;
}

Result<std::array<uint8_t, 32>> KeyAgreement(const KexSecretKey& secret,
                                             const KexPublicKey& peer) {
  EnsureInitialized();
  std::array<uint8_t, 32> shared{};
  if (crypto_scalarmult_curve25519(shared.data(), secret.data(), peer.data()) !=
      0) {
    return MakeError(Errc::kProtocolError, "degenerate key-agreement point");
  }
  return shared;
}

namespace {

std::array<uint8_t, crypto_aead_chacha20poly1305_ietf_NPUBBYTES> CounterNonce(
    uint64_t counter) {
  std::array<uint8_t, crypto_aead_chacha20poly1305_ietf_NPUBBYTES> nonce{};
  for (int i = 0; i < 8; ++i) {
    nonce[4 + i] = static_cast<uint8_t>(counter >> (8 * i));
  }
  return nonce;
}

}  // namespace

Bytes AeadSeal(const AeadKey& key, uint64_t counter, ByteView associated_data,
               ByteView plaintext) {
  EnsureInitialized();
  auto nonce = CounterNonce(counter);
  Bytes out(plaintext.size() + kAeadTagBytes);
  unsigned long long out_len = 0;
  crypto_aead_chacha20poly1305_ietf_encrypt(
      out.data(), &out_len, plaintext.data(), plaintext.size(),
      associated_data.data(), associated_data.size(), nullptr, nonce.data(),
      key.data());
  out.resize(out_len);
  return out;
}

Result<Bytes> AeadOpen(const AeadKey& key, uint64_t counter,
                       ByteView associated_data, ByteView ciphertext) {
  EnsureInitialized();
  if (ciphertext.size() < kAeadTagBytes) {
    return MakeError(Errc::kAuthFailure, "ciphertext shorter than tag");
  }
  auto nonce = CounterNonce(counter);
  Bytes out(ciphertext.size() - kAeadTagBytes);
  unsigned long long out_len = 0;
  if (crypto_aead_chacha20poly1305_ietf_decrypt(
          out.data(), &out_len, nullptr, ciphertext.data(), ciphertext.size(),
          associated_data.data(), associated_data.size(), nonce.data(),
          key.data()) != 0) {
    return MakeError(Errc::kAuthFailure, "authentication tag mismatch");
  }
  out.resize(out_len);
  return out;
}

}  // namespace zkg::crypto

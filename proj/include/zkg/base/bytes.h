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

#ifndef ZKG_BASE_BYTES_H_
#define ZKG_BASE_BYTES_H_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zkg/base/result.h"

namespace zkg {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;
using Digest = std::array<uint8_t, 32>;

inline ByteView AsBytes(std::string_view s) {
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

inline Bytes ToBytes(std::string_view s) {
  auto v = AsBytes(s);
  return {v.begin(), v.end()};
}

// Lowercase hex.
std::string ToHex(ByteView bytes);
Result<Bytes> FromHex(std::string_view hex);
// Fails unless `hex` decodes to exactly N bytes.
template <size_t N>
Result<std::array<uint8_t, N>> FromHexFixed(std::string_view hex) {
  ZKG_ASSIGN_OR_RETURN(Bytes raw, FromHex(hex));
  if (raw.size() != N) {
    return MakeError(Errc::kParseError,
                     "expected " + std::to_string(N) + " hex-encoded bytes, got " +
                         std::to_string(raw.size()));
  }
  std::array<uint8_t, N> out{};
  std::copy(raw.begin(), raw.end(), out.begin());
  return out;
}

// Appends fixed-width little-endian integers and u32-length-prefixed byte
// strings. This is the building block of every canonical encoding in the
// project.
class ByteWriter {
 public:
  ByteWriter() = default;

  ByteWriter& U8(uint8_t v);
  ByteWriter& U16(uint16_t v);
  ByteWriter& U32(uint32_t v);
  ByteWriter& U64(uint64_t v);
  ByteWriter& I32(int32_t v) { return U32(static_cast<uint32_t>(v)); }
  ByteWriter& I64(int64_t v) { return U64(static_cast<uint64_t>(v)); }
  // Raw bytes, no prefix.
  ByteWriter& Raw(ByteView bytes);
  // u32 LE length followed by the bytes.
  ByteWriter& Prefixed(ByteView bytes);
  ByteWriter& Prefixed(std::string_view s) { return Prefixed(AsBytes(s)); }

  const Bytes& bytes() const& { return buf_; }
  Bytes&& Take() && { return std::move(buf_); }
  size_t size() const { return buf_.size(); }

 private:
  Bytes buf_;
};

// Bounds-checked reader over a byte span. Every getter fails with kTruncated
// instead of reading past the end.
class ByteReader {
 public:
  explicit ByteReader(ByteView data) : data_(data) {}

  Result<uint8_t> U8();
  Result<uint16_t> U16();
  Result<uint32_t> U32();
  Result<uint64_t> U64();
  Result<int32_t> I32();
  Result<int64_t> I64();
  Result<ByteView> Raw(size_t n);
  Result<ByteView> Prefixed();
  template <size_t N>
  Result<std::array<uint8_t, N>> Fixed() {
    ZKG_ASSIGN_OR_RETURN(ByteView v, Raw(N));
    std::array<uint8_t, N> out{};
    std::copy(v.begin(), v.end(), out.begin());
    return out;
  }

  size_t remaining() const { return data_.size() - pos_; }
  size_t position() const { return pos_; }
  bool empty() const { return remaining() == 0; }
  // kParseError if any input is left unconsumed.
  Status ExpectEnd() const;

 private:
  ByteView data_;
  size_t pos_ = 0;
};

}  // namespace zkg

#endif  // ZKG_BASE_BYTES_H_

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

#include "zkg/base/bytes.h"

#include <algorithm>

namespace zkg {
namespace {

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string ToHex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Result<Bytes> FromHex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    return MakeError(Errc::kParseError, "odd-length hex string");
  }
  Bytes out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = HexValue(hex[i]);
    int lo = HexValue(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      return MakeError(Errc::kParseError, "invalid hex digit");
    }
    out.push_back(static_cast<uint8_t>((hi << 4) | lo));
  }
  return out;
}

ByteWriter& ByteWriter::U8(uint8_t v) {
  buf_.push_back(v);
  return *this;
}

ByteWriter& ByteWriter::U16(uint16_t v) {
  for (int i = 0; i < 2; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  return *this;
}

ByteWriter& ByteWriter::U32(uint32_t v) {
  for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  return *this;
}

ByteWriter& ByteWriter::U64(uint64_t v) {
  for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  return *this;
}

ByteWriter& ByteWriter::Raw(ByteView bytes) {
  buf_.insert(buf_.end(), bytes.begin(), bytes.end());
  return *this;
}

ByteWriter& ByteWriter::Prefixed(ByteView bytes) {
  U32(static_cast<uint32_t>(bytes.size()));
  return Raw(bytes);
}

Result<ByteView> ByteReader::Raw(size_t n) {
  if (remaining() < n) {
    return MakeError(Errc::kTruncated, "need " + std::to_string(n) +
                                           " bytes, have " +
                                           std::to_string(remaining()));
  }
  ByteView out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

namespace {

template <typename T>
Result<T> ReadLittleEndian(ByteReader& reader) {
  ZKG_ASSIGN_OR_RETURN(ByteView raw, reader.Raw(sizeof(T)));
  T v = 0;
  for (size_t i = 0; i < sizeof(T); ++i) {
    v |= static_cast<T>(static_cast<T>(raw[i]) << (8 * i));
  }
  return v;
}

}  // namespace

Result<uint8_t> ByteReader::U8() { return ReadLittleEndian<uint8_t>(*this); }
Result<uint16_t> ByteReader::U16() { return ReadLittleEndian<uint16_t>(*this); }
Result<uint32_t> ByteReader::U32() { return ReadLittleEndian<uint32_t>(*this); }
Result<uint64_t> ByteReader::U64() { return ReadLittleEndian<uint64_t>(*this); }

Result<int32_t> ByteReader::I32() {
  ZKG_ASSIGN_OR_RETURN(uint32_t v, U32());
  return static_cast<int32_t>(v);
}

Result<int64_t> ByteReader::I64() {
  ZKG_ASSIGN_OR_RETURN(uint64_t v, U64());
  return static_cast<int64_t>(v);
}

Result<ByteView> ByteReader::Prefixed() {
  ZKG_ASSIGN_OR_RETURN(uint32_t len, U32());
  return Raw(len);
}

Status ByteReader::ExpectEnd() const {
  if (!empty()) {
    return MakeError(Errc::kParseError,
                     std::to_string(remaining()) + " trailing bytes");
  }
  return OkStatus();
}

}  // namespace zkg

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

#ifndef ZKG_BASE_RESULT_H_
#define ZKG_BASE_RESULT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>

namespace zkg {

// Error codes shared by every module. The numeric values travel on the wire
// inside Error app messages, so they must never be renumbered.
enum class Errc : uint16_t {
  kOk = 0,
  // enclave
  kInvalidManifest = 10,
  kUnknownPlatformKey = 11,
  kBadSignature = 12,
  kUnknownMeasurement = 13,
  kReportMismatch = 14,
  // channel
  kProtocolError = 20,
  kHandshakeAborted = 21,
  kAuthFailure = 22,
  kReplayDetected = 23,
  kSequenceGap = 24,
  kSequenceOverflow = 25,
  kConnectionClosed = 26,
  // policy
  kEmptyIdentity = 30,
  kInvalidK = 31,
  kMalformedGraph = 32,
  kLabelViolation = 33,
  // shufflepuck / server
  kOutOfRange = 40,
  kWrongPhase = 41,
  kWrongRole = 42,
  kMatchFull = 43,
  kUnknownMatch = 44,
  kNotLoggedIn = 45,
  kAlreadyInMatch = 46,
  // plumbing
  kIoError = 50,
  kParseError = 51,
  kTruncated = 52,
  kInvalidArgument = 53,
};

std::string_view ErrcName(Errc code);

struct Error {
  Errc code = Errc::kOk;
  std::string message;
  // Set when `code` wraps a lower-level failure (HandshakeAborted wraps the
  // verify_quote error that caused it).
  Errc cause = Errc::kOk;

  // The innermost error code: `cause` if set, otherwise `code`.
  Errc root() const { return cause == Errc::kOk ? code : cause; }
  std::string ToString() const;
};

inline Error MakeError(Errc code, std::string message = {}) {
  return Error{code, std::move(message), Errc::kOk};
}

// Minimal value-or-error holder in the spirit of absl::StatusOr.
template <typename T>
class [[nodiscard]] Result {
 public:
  Result(const T& value) : v_(value) {}                      // NOLINT
  Result(T&& value) : v_(std::move(value)) {}                // NOLINT
  Result(Error error) : v_(std::move(error)) {}              // NOLINT

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<0>(v_); }
  T& value() & { return std::get<0>(v_); }
  T&& value() && { return std::get<0>(std::move(v_)); }

  const T& operator*() const& { return value(); }
  T& operator*() & { return value(); }
  const T* operator->() const { return &value(); }
  T* operator->() { return &value(); }

  const Error& error() const { return std::get<1>(v_); }
  Errc code() const { return ok() ? Errc::kOk : error().code; }

 private:
  std::variant<T, Error> v_;
};

template <>
class [[nodiscard]] Result<void> {
 public:
  Result() = default;
  Result(Error error) : error_(std::move(error)) {}  // NOLINT

  bool ok() const { return error_.code == Errc::kOk; }
  explicit operator bool() const { return ok(); }
  const Error& error() const { return error_; }
  Errc code() const { return error_.code; }

 private:
  Error error_;
};

using Status = Result<void>;

inline Status OkStatus() { return Status(); }

}  // namespace zkg

#define ZKG_CONCAT_INNER_(a, b) a##b
#define ZKG_CONCAT_(a, b) ZKG_CONCAT_INNER_(a, b)

#define ZKG_RETURN_IF_ERROR(expr)            \
  do {                                       \
    auto zkg_status_ = (expr);               \
    if (!zkg_status_.ok()) {                 \
      return zkg_status_.error();            \
    }                                        \
  } while (false)

#define ZKG_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, expr) \
  auto tmp = (expr);                               \
  if (!tmp.ok()) {                                 \
    return tmp.error();                            \
  }                                                \
  lhs = std::move(tmp).value()

#define ZKG_ASSIGN_OR_RETURN(lhs, expr) \
  ZKG_ASSIGN_OR_RETURN_IMPL_(ZKG_CONCAT_(zkg_result_, __LINE__), lhs, expr)

#endif  // ZKG_BASE_RESULT_H_

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

#include "zkg/base/result.h"

namespace zkg {

std::string_view ErrcName(Errc code) {
  switch (code) {
    case Errc::kOk: return "Ok";
    case Errc::kInvalidManifest: return "InvalidManifest";
    case Errc::kUnknownPlatformKey: return "UnknownPlatformKey";
    case Errc::kBadSignature: return "BadSignature";
    case Errc::kUnknownMeasurement: return "UnknownMeasurement";
    case Errc::kReportMismatch: return "ReportMismatch";
    case Errc::kProtocolError: return "ProtocolError";
    case Errc::kHandshakeAborted: return "HandshakeAborted";
    case Errc::kAuthFailure: return "AuthFailure";
    case Errc::kReplayDetected: return "ReplayDetected";
    case Errc::kSequenceGap: return "SequenceGap";
    case Errc::kSequenceOverflow: return "SequenceOverflow";
    case Errc::kConnectionClosed: return "ConnectionClosed";
    case Errc::kEmptyIdentity: return "EmptyIdentity";
    case Errc::kInvalidK: return "InvalidK";
    case Errc::kMalformedGraph: return "MalformedGraph";
    case Errc::kLabelViolation: return "LabelViolation";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kWrongPhase: return "WrongPhase";
    case Errc::kWrongRole: return "WrongRole";
    case Errc::kMatchFull: return "MatchFull";
    case Errc::kUnknownMatch: return "UnknownMatch";
    case Errc::kNotLoggedIn: return "NotLoggedIn";
    case Errc::kAlreadyInMatch: return "AlreadyInMatch";
    case Errc::kIoError: return "IoError";
    case Errc::kParseError: return "ParseError";
    case Errc::kTruncated: return "Truncated";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string Error::ToString() const {
  std::string out(ErrcName(code));
  if (cause != Errc::kOk) {
    out += "(";
    out += ErrcName(cause);
    out += ")";
  }
  if (!message.empty()) {
    out += ": ";
    out += message;
  }
  return out;
}

}  // namespace zkg

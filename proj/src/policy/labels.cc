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

#include "zkg/policy/labels.h"

namespace zkg::policy {

std::string_view LabelName(DataLabel label) {
  switch (label) {
    case DataLabel::kPublic: return "Public";
    case DataLabel::kAggregate: return "Aggregate";
    case DataLabel::kPseudonymous: return "Pseudonymous";
    case DataLabel::kPlayerMetric: return "PlayerMetric";
    case DataLabel::kRawInput: return "RawInput";
    case DataLabel::kPlayerIdentity: return "PlayerIdentity";
  }
  return "?";
}

Result<DataLabel> ParseLabel(std::string_view name) {
  for (DataLabel label : kAllLabels) {
    if (LabelName(label) == name) return label;
  }
  return MakeError(Errc::kParseError, "unknown data label '" + std::string(name) + "'");
}

std::optional<DataLabel> LabelFromByte(uint8_t value) {
  if (value > static_cast<uint8_t>(kTopLabel)) return std::nullopt;
  return static_cast<DataLabel>(value);
}

std::string_view DeclassifierKindName(DeclassifierKind kind) {
  switch (kind) {
    case DeclassifierKind::kPseudonymize: return "Pseudonymize";
    case DeclassifierKind::kAggregateK: return "AggregateK";
  }
  return "?";
}

Result<DeclassifierKind> ParseDeclassifierKind(std::string_view name) {
  if (name == "Pseudonymize") return DeclassifierKind::kPseudonymize;
  if (name == "AggregateK") return DeclassifierKind::kAggregateK;
  return MakeError(Errc::kParseError,
                   "unknown declassifier kind '" + std::string(name) + "'");
}

Status ValidateDeclassifier(const DeclassifierDecl& decl) {
  if (!label_lt(decl.output_label, decl.input_label)) {
    return MakeError(Errc::kInvalidManifest,
                     "declassifier output label must be strictly below its input label");
  }
  switch (decl.kind) {
    case DeclassifierKind::kPseudonymize:
      if (decl.input_label != DataLabel::kPlayerIdentity ||
          decl.output_label != DataLabel::kPseudonymous) {
        return MakeError(Errc::kInvalidManifest,
                         "Pseudonymize must map PlayerIdentity to Pseudonymous");
      }
      if (decl.k != 0) {
        return MakeError(Errc::kInvalidManifest, "Pseudonymize takes no k");
      }
      break;
    case DeclassifierKind::kAggregateK:
      if (decl.output_label != DataLabel::kAggregate) {
        return MakeError(Errc::kInvalidManifest, "AggregateK must output Aggregate");
      }
      if (decl.k < 2) {
        return MakeError(Errc::kInvalidManifest, "AggregateK requires k >= 2");
      }
      break;
  }
  return OkStatus();
}

std::string_view SinkKindName(SinkKind kind) {
  switch (kind) {
    case SinkKind::kNetwork: return "network";
    case SinkKind::kPersistence: return "persistence";
  }
  return "?";
}

Result<SinkKind> ParseSinkKind(std::string_view name) {
  if (name == "network") return SinkKind::kNetwork;
  if (name == "persistence") return SinkKind::kPersistence;
  return MakeError(Errc::kParseError, "unknown sink kind '" + std::string(name) + "'");
}

}  // namespace zkg::policy

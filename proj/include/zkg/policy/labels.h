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

#ifndef ZKG_POLICY_LABELS_H_
#define ZKG_POLICY_LABELS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "zkg/base/result.h"

namespace zkg::policy {

// Sensitivity of a data flow. A total order, least sensitive first; the
// numeric value is the encoded form and the order key.
enum class DataLabel : uint8_t {
  kPublic = 0,
  kAggregate = 1,
  kPseudonymous = 2,
  kPlayerMetric = 3,
  kRawInput = 4,
  kPlayerIdentity = 5,
};

inline constexpr std::array<DataLabel, 6> kAllLabels = {
    DataLabel::kPublic,       DataLabel::kAggregate, DataLabel::kPseudonymous,
    DataLabel::kPlayerMetric, DataLabel::kRawInput,  DataLabel::kPlayerIdentity,
};

inline constexpr DataLabel kTopLabel = DataLabel::kPlayerIdentity;

// a ⊑ b: `a` may flow wherever `b` may.
constexpr bool label_leq(DataLabel a, DataLabel b) {
  return static_cast<uint8_t>(a) <= static_cast<uint8_t>(b);
}

constexpr bool label_lt(DataLabel a, DataLabel b) {
  return static_cast<uint8_t>(a) < static_cast<uint8_t>(b);
}

constexpr DataLabel label_max(DataLabel a, DataLabel b) {
  return label_leq(a, b) ? b : a;
}

std::string_view LabelName(DataLabel label);
Result<DataLabel> ParseLabel(std::string_view name);
std::optional<DataLabel> LabelFromByte(uint8_t value);

enum class DeclassifierKind : uint8_t {
  kPseudonymize = 0,
  kAggregateK = 1,
};

std::string_view DeclassifierKindName(DeclassifierKind kind);
Result<DeclassifierKind> ParseDeclassifierKind(std::string_view name);

struct DeclassifierDecl {
  DeclassifierKind kind = DeclassifierKind::kPseudonymize;
  DataLabel input_label = DataLabel::kPlayerIdentity;
  DataLabel output_label = DataLabel::kPseudonymous;
  // AggregateK only; 0 for Pseudonymize.
  uint32_t k = 0;

  friend bool operator==(const DeclassifierDecl&, const DeclassifierDecl&) =
      default;
};

// Pseudonymize maps PlayerIdentity to Pseudonymous and nothing else.
// AggregateK maps anything strictly above Aggregate to Aggregate, k >= 2.
Status ValidateDeclassifier(const DeclassifierDecl& decl);

enum class SinkKind : uint8_t {
  kNetwork = 0,
  kPersistence = 1,
};

std::string_view SinkKindName(SinkKind kind);
Result<SinkKind> ParseSinkKind(std::string_view name);

struct SinkDecl {
  std::string sink_id;
  DataLabel label = DataLabel::kPublic;
  SinkKind kind = SinkKind::kNetwork;

  friend bool operator==(const SinkDecl&, const SinkDecl&) = default;
};

}  // namespace zkg::policy

#endif  // ZKG_POLICY_LABELS_H_

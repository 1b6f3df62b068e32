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

#ifndef ZKG_ENCLAVE_MANIFEST_H_
#define ZKG_ENCLAVE_MANIFEST_H_

#include <compare>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zkg/base/bytes.h"
#include "zkg/base/result.h"
#include "zkg/policy/labels.h"

namespace zkg::enclave {

inline constexpr size_t kMaxComponentIdBytes = 64;

// Identity of an auditable software compartment together with every data
// flow it declares. The measurement covers all of it, so a component that
// quietly adds an egress sink no longer attests as the audited build.
struct ComponentManifest {
  std::string component_id;
  // Hash of the component's build artifact. Absent for unmeasured components
  // (which the R4 lint flags when they receive sensitive data).
  std::optional<Digest> code_digest;
  std::set<policy::DataLabel> input_labels;
  std::set<policy::DataLabel> output_labels;
  std::vector<policy::DeclassifierDecl> declassifiers;
  std::vector<policy::SinkDecl> egress_sinks;

  friend bool operator==(const ComponentManifest&,
                         const ComponentManifest&) = default;
};

struct Measurement {
  Digest bytes{};

  std::string ToHex() const { return zkg::ToHex(bytes); }
  static Result<Measurement> FromHex(std::string_view hex);

  friend auto operator<=>(const Measurement&, const Measurement&) = default;
};

bool IsValidComponentId(std::string_view id);

// Checks every manifest invariant; kInvalidManifest on failure.
Status ValidateManifest(const ComponentManifest& manifest);

// Deterministic encoding: fields in declared order, strings and byte arrays
// u32-LE length-prefixed, sets as a u32 count followed by elements sorted by
// their encoded form, integers fixed-width little-endian. Lists keep their
// declared order.
Result<Bytes> CanonicalEncode(const ComponentManifest& manifest);

// SHA-256 of the canonical encoding.
Result<Measurement> Measure(const ComponentManifest& manifest);

// JSON with exactly the ComponentManifest fields; byte arrays lowercase hex.
// An empty string (or null) code_digest means "absent".
Result<ComponentManifest> ManifestFromJson(const nlohmann::json& j);
nlohmann::json ManifestToJson(const ComponentManifest& manifest);
Result<ComponentManifest> LoadManifest(const std::filesystem::path& path);

}  // namespace zkg::enclave

#endif  // ZKG_ENCLAVE_MANIFEST_H_

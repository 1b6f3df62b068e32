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

#ifndef ZKG_POLICY_LINT_H_
#define ZKG_POLICY_LINT_H_

#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zkg/base/result.h"
#include "zkg/enclave/manifest.h"
#include "zkg/policy/declassify.h"
#include "zkg/policy/labels.h"

namespace zkg::policy {

struct FlowEdge {
  std::string from;
  std::string to;
  DataLabel label = DataLabel::kPublic;
  // Set when the sender applies one of its declassifiers on this edge; the
  // edge label is then that declassifier's output label.
  std::optional<DeclassifierKind> via_declassifier;

  friend bool operator==(const FlowEdge&, const FlowEdge&) = default;
};

struct ComponentGraph {
  std::vector<enclave::ComponentManifest> nodes;
  std::vector<FlowEdge> edges;
};

struct LintConfig {
  uint32_t k_min = kDefaultKMin;
};

struct LintFinding {
  std::string rule_id;
  std::string component_id;
  std::string message;

  friend auto operator<=>(const LintFinding&, const LintFinding&) = default;
};

// kMalformedGraph unless: component ids are unique, every manifest is
// valid, edge endpoints exist, each edge label is among the sender's
// outputs and the receiver's inputs, and a via_declassifier names a
// declassifier the sender declares with that output label.
Status ValidateGraph(const ComponentGraph& graph);

// Runs the fixed rule set and returns findings sorted by (rule, component,
// message). The result does not depend on node or edge order.
//
//   R1 RawEgress            a network/persistence sink carries a label at or
//                           above PlayerMetric with no declassifier on the path
//   R2 KeyColocation        the pseudonym-key holder also receives
//                           Pseudonymous data
//   R3 WeakAggregation      AggregateK with k below the configured minimum
//   R4 UnmeasuredSensitive  receives Pseudonymous or above, no code_digest
//   R5 PersistentRaw        persistence sink at or above PlayerMetric
Result<std::vector<LintFinding>> CheckFlows(const ComponentGraph& graph,
                                            const LintConfig& config = {});

// One line per finding: RULE_ID<TAB>component<TAB>message.
std::string FormatFindings(const std::vector<LintFinding>& findings);

// A graph file: {"components": [manifest...], "edges": [{"from", "to",
// "label", "via_declassifier"?}], "k_min"?}
struct GraphFile {
  ComponentGraph graph;
  LintConfig config;
};

Result<GraphFile> GraphFromJson(const nlohmann::json& j);
nlohmann::json GraphToJson(const ComponentGraph& graph, const LintConfig& config);
Result<GraphFile> LoadGraph(const std::filesystem::path& path);

}  // namespace zkg::policy

#endif  // ZKG_POLICY_LINT_H_

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

#include "zkg/policy/lint.h"

#include <algorithm>
#include <map>
#include <set>

#include "zkg/base/io.h"

namespace zkg::policy {

using enclave::ComponentManifest;
using nlohmann::json;

namespace {

Error Malformed(std::string message) {
  return MakeError(Errc::kMalformedGraph, std::move(message));
}

bool Declares(const ComponentManifest& m, DeclassifierKind kind) {
  return std::any_of(m.declassifiers.begin(), m.declassifiers.end(),
                     [&](const DeclassifierDecl& d) { return d.kind == kind; });
}

std::string Label(DataLabel l) { return std::string(LabelName(l)); }

}  // namespace

Status ValidateGraph(const ComponentGraph& graph) {
  std::map<std::string_view, const ComponentManifest*> by_id;
  for (const auto& node : graph.nodes) {
    if (auto s = enclave::ValidateManifest(node); !s.ok()) {
      return Malformed(s.error().message);
    }
    if (!by_id.emplace(node.component_id, &node).second) {
      return Malformed("duplicate component '" + node.component_id + "'");
    }
  }
  for (const auto& e : graph.edges) {
    auto from = by_id.find(e.from);
    auto to = by_id.find(e.to);
    if (from == by_id.end() || to == by_id.end()) {
      return Malformed("edge " + e.from + " -> " + e.to + " names an unknown component");
    }
    if (!from->second->output_labels.contains(e.label)) {
      return Malformed("edge " + e.from + " -> " + e.to + ": " + Label(e.label) +
                       " is not an output of " + e.from);
    }
    if (!to->second->input_labels.contains(e.label)) {
      return Malformed("edge " + e.from + " -> " + e.to + ": " + Label(e.label) +
                       " is not an input of " + e.to);
    }
    if (e.via_declassifier) {
      const auto& decls = from->second->declassifiers;
      bool found = std::any_of(decls.begin(), decls.end(), [&](const DeclassifierDecl& d) {
        return d.kind == *e.via_declassifier && d.output_label == e.label;
      });
      if (!found) {
        return Malformed("edge " + e.from + " -> " + e.to + " claims a " +
                         std::string(DeclassifierKindName(*e.via_declassifier)) +
                         " declassifier that " + e.from + " does not declare");
      }
    }
  }
  return OkStatus();
}

Result<std::vector<LintFinding>> CheckFlows(const ComponentGraph& graph,
                                            const LintConfig& config) {
  ZKG_RETURN_IF_ERROR(ValidateGraph(graph));
  std::set<LintFinding> findings;

  // Highest label entering each component on an edge that skipped every
  // declassifier, and the senders of Pseudonymous data.
  std::map<std::string, DataLabel> undeclassified_in;
  std::map<std::string, std::set<std::string>> pseudonymous_senders;
  for (const auto& e : graph.edges) {
    if (!e.via_declassifier) {
      auto [it, inserted] = undeclassified_in.try_emplace(e.to, e.label);
      it->second = label_max(it->second, e.label);
    }
    if (e.label == DataLabel::kPseudonymous) pseudonymous_senders[e.to].insert(e.from);
  }

  for (const auto& node : graph.nodes) {
    const std::string& id = node.component_id;

    for (const auto& sink : node.egress_sinks) {
      // A component without declassifiers passes whatever reaches it
      // straight through to its sinks.
      DataLabel carried = sink.label;
      if (node.declassifiers.empty()) {
        if (auto it = undeclassified_in.find(id); it != undeclassified_in.end()) {
          carried = label_max(carried, it->second);
        }
      }
      bool declassified_on_path =
          std::any_of(node.declassifiers.begin(), node.declassifiers.end(),
                      [&](const DeclassifierDecl& d) { return d.input_label == carried; });
      if (label_leq(DataLabel::kPlayerMetric, carried) && !declassified_on_path) {
        findings.insert({"R1", id,
                         std::string(SinkKindName(sink.kind)) + " sink '" + sink.sink_id +
                             "' carries " + Label(carried) +
                             " with no declassifier on the path"});
      }
      if (sink.kind == SinkKind::kPersistence &&
          label_leq(DataLabel::kPlayerMetric, sink.label)) {
        findings.insert({"R5", id,
                         "persistence sink '" + sink.sink_id + "' stores " +
                             Label(sink.label)});
      }
    }

    if (Declares(node, DeclassifierKind::kPseudonymize)) {
      if (auto it = pseudonymous_senders.find(id); it != pseudonymous_senders.end()) {
        std::string senders;
        for (const auto& s : it->second) {
          if (!senders.empty()) senders += ",";
          senders += s;
        }
        findings.insert({"R2", id,
                         "holds the pseudonym key and receives Pseudonymous data from " +
                             senders});
      }
    }

    for (const auto& d : node.declassifiers) {
      if (d.kind == DeclassifierKind::kAggregateK && d.k < config.k_min) {
        findings.insert({"R3", id,
                         "AggregateK with k=" + std::to_string(d.k) + " below minimum " +
                             std::to_string(config.k_min)});
      }
    }

    DataLabel max_in = DataLabel::kPublic;
    for (DataLabel l : node.input_labels) max_in = label_max(max_in, l);
    if (!node.input_labels.empty() && label_leq(DataLabel::kPseudonymous, max_in) &&
        !node.code_digest) {
      findings.insert({"R4", id,
                       "receives " + Label(max_in) + " data but declares no code_digest"});
    }
  }
  return std::vector<LintFinding>(findings.begin(), findings.end());
}

std::string FormatFindings(const std::vector<LintFinding>& findings) {
  std::vector<LintFinding> sorted = findings;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const auto& f : sorted) {
    out += f.rule_id + "\t" + f.component_id + "\t" + f.message + "\n";
  }
  return out;
}

Result<GraphFile> GraphFromJson(const json& j) {
  if (auto s = ExpectKeys(j, {"components", "edges"}, {"k_min"}, "graph"); !s.ok()) {
    return Malformed(s.error().message);
  }
  if (!j["components"].is_array() || !j["edges"].is_array()) {
    return Malformed("components and edges must be arrays");
  }
  GraphFile file;
  for (const auto& c : j["components"]) {
    auto m = enclave::ManifestFromJson(c);
    if (!m.ok()) return Malformed(m.error().message);
    file.graph.nodes.push_back(std::move(*m));
  }
  for (const auto& e : j["edges"]) {
    if (auto s = ExpectKeys(e, {"from", "to", "label"}, {"via_declassifier"}, "edge");
        !s.ok()) {
      return Malformed(s.error().message);
    }
    if (!e["from"].is_string() || !e["to"].is_string() || !e["label"].is_string()) {
      return Malformed("edge fields must be strings");
    }
    FlowEdge edge;
    edge.from = e["from"].get<std::string>();
    edge.to = e["to"].get<std::string>();
    auto label = ParseLabel(e["label"].get<std::string>());
    if (!label.ok()) return Malformed(label.error().message);
    edge.label = *label;
    if (e.contains("via_declassifier") && !e["via_declassifier"].is_null()) {
      if (!e["via_declassifier"].is_string()) {
        return Malformed("via_declassifier must be a string or null");
      }
      auto kind = ParseDeclassifierKind(e["via_declassifier"].get<std::string>());
      if (!kind.ok()) return Malformed(kind.error().message);
      edge.via_declassifier = *kind;
    }
    file.graph.edges.push_back(std::move(edge));
  }
  if (j.contains("k_min")) {
    if (!j["k_min"].is_number_unsigned() || j["k_min"].get<uint64_t>() < 2 ||
        j["k_min"].get<uint64_t>() > UINT32_MAX) {
      return Malformed("k_min must be an integer >= 2");
    }
    file.config.k_min = j["k_min"].get<uint32_t>();
  }
  return file;
}

json GraphToJson(const ComponentGraph& graph, const LintConfig& config) {
  json j;
  j["components"] = json::array();
  for (const auto& n : graph.nodes) j["components"].push_back(enclave::ManifestToJson(n));
  j["edges"] = json::array();
  for (const auto& e : graph.edges) {
    json ej{{"from", e.from}, {"to", e.to}, {"label", Label(e.label)}};
    ej["via_declassifier"] =
        e.via_declassifier ? json(std::string(DeclassifierKindName(*e.via_declassifier)))
                           : json(nullptr);
    j["edges"].push_back(ej);
  }
  j["k_min"] = config.k_min;
  return j;
}

Result<GraphFile> LoadGraph(const std::filesystem::path& path) {
  auto j = ReadJsonFile(path);
  if (!j.ok()) return j.error();
  return GraphFromJson(*j);
}

}  // namespace zkg::policy

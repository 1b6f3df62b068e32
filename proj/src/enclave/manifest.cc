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

#include "zkg/enclave/manifest.h"

#include <algorithm>
#include <set>

#include "zkg/base/crypto.h"
#include "zkg/base/io.h"

namespace zkg::enclave {

using nlohmann::json;
using policy::DataLabel;

Result<Measurement> Measurement::FromHex(std::string_view hex) {
  ZKG_ASSIGN_OR_RETURN(Digest d, FromHexFixed<32>(hex));
  return Measurement{d};
}

bool IsValidComponentId(std::string_view id) {
  if (id.empty() || id.size() > kMaxComponentIdBytes) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '-' || c == '_';
  });
}

Status ValidateManifest(const ComponentManifest& manifest) {
  if (!IsValidComponentId(manifest.component_id)) {
    return MakeError(Errc::kInvalidManifest,
                     "component_id must be 1-64 bytes of [A-Za-z0-9_-]");
  }
  for (const auto& decl : manifest.declassifiers) {
    auto status = policy::ValidateDeclassifier(decl);
    if (!status.ok()) {
      return MakeError(Errc::kInvalidManifest,
                       manifest.component_id + ": " + status.error().message);
    }
  }
  std::set<std::string_view> sink_ids;
  for (const auto& sink : manifest.egress_sinks) {
    if (!IsValidComponentId(sink.sink_id)) {
      return MakeError(Errc::kInvalidManifest,
                       "sink_id must be 1-64 bytes of [A-Za-z0-9_-]");
    }
    if (!sink_ids.insert(sink.sink_id).second) {
      return MakeError(Errc::kInvalidManifest, "duplicate sink_id " + sink.sink_id);
    }
  }
  return OkStatus();
}

namespace {

void EncodeLabelSet(ByteWriter& w, const std::set<DataLabel>& labels) {
  // std::set orders by the enum value, which is exactly the encoded byte.
  w.U32(static_cast<uint32_t>(labels.size()));
  for (DataLabel label : labels) w.U8(static_cast<uint8_t>(label));
}

}  // namespace

Result<Bytes> CanonicalEncode(const ComponentManifest& manifest) {
  ZKG_RETURN_IF_ERROR(ValidateManifest(manifest));
  ByteWriter w;
  w.Prefixed(manifest.component_id);
  if (manifest.code_digest) {
    w.Prefixed(*manifest.code_digest);
  } else {
    w.Prefixed(ByteView{});
  }
  EncodeLabelSet(w, manifest.input_labels);
  EncodeLabelSet(w, manifest.output_labels);
  w.U32(static_cast<uint32_t>(manifest.declassifiers.size()));
  for (const auto& decl : manifest.declassifiers) {
    w.U8(static_cast<uint8_t>(decl.kind))
        .U8(static_cast<uint8_t>(decl.input_label))
        .U8(static_cast<uint8_t>(decl.output_label))
        .U32(decl.k);
  }
  w.U32(static_cast<uint32_t>(manifest.egress_sinks.size()));
  for (const auto& sink : manifest.egress_sinks) {
    w.Prefixed(sink.sink_id)
        .U8(static_cast<uint8_t>(sink.label))
        .U8(static_cast<uint8_t>(sink.kind));
  }
  return std::move(w).Take();
}

Result<Measurement> Measure(const ComponentManifest& manifest) {
  ZKG_ASSIGN_OR_RETURN(Bytes encoded, CanonicalEncode(manifest));
  return Measurement{crypto::Sha256(encoded)};
}

namespace {

Error Invalid(std::string message) {
  return MakeError(Errc::kInvalidManifest, std::move(message));
}

Result<std::set<DataLabel>> LabelSetFromJson(const json& j, std::string_view field) {
  if (!j.is_array()) return Invalid(std::string(field) + " must be an array");
  std::set<DataLabel> out;
  for (const auto& item : j) {
    if (!item.is_string()) return Invalid(std::string(field) + " entries must be strings");
    auto label = policy::ParseLabel(item.get<std::string>());
    if (!label.ok()) return Invalid(label.error().message);
    if (!out.insert(*label).second) {
      return Invalid(std::string(field) + " lists a label twice");
    }
  }
  return out;
}

Result<policy::DeclassifierDecl> DeclassifierFromJson(const json& j) {
  auto keys = ExpectKeys(j, {"kind", "input_label", "output_label"}, {"k"},
                         "declassifier");
  if (!keys.ok()) return Invalid(keys.error().message);
  policy::DeclassifierDecl decl;
  if (!j["kind"].is_string() || !j["input_label"].is_string() ||
      !j["output_label"].is_string()) {
    return Invalid("declassifier fields must be strings");
  }
  auto kind = policy::ParseDeclassifierKind(j["kind"].get<std::string>());
  auto in = policy::ParseLabel(j["input_label"].get<std::string>());
  auto out = policy::ParseLabel(j["output_label"].get<std::string>());
  if (!kind.ok()) return Invalid(kind.error().message);
  if (!in.ok()) return Invalid(in.error().message);
  if (!out.ok()) return Invalid(out.error().message);
  decl.kind = *kind;
  decl.input_label = *in;
  decl.output_label = *out;
  if (j.contains("k")) {
    if (!j["k"].is_number_unsigned()) return Invalid("k must be a non-negative integer");
    uint64_t k = j["k"].get<uint64_t>();
    if (k > UINT32_MAX) return Invalid("k out of range");
    decl.k = static_cast<uint32_t>(k);
  }
  return decl;
}

Result<policy::SinkDecl> SinkFromJson(const json& j) {
  auto keys = ExpectKeys(j, {"sink_id", "label", "kind"}, {}, "egress sink");
  if (!keys.ok()) return Invalid(keys.error().message);
  if (!j["sink_id"].is_string() || !j["label"].is_string() || !j["kind"].is_string()) {
    return Invalid("egress sink fields must be strings");
  }
  policy::SinkDecl sink;
  sink.sink_id = j["sink_id"].get<std::string>();
  auto label = policy::ParseLabel(j["label"].get<std::string>());
  auto kind = policy::ParseSinkKind(j["kind"].get<std::string>());
  if (!label.ok()) return Invalid(label.error().message);
  if (!kind.ok()) return Invalid(kind.error().message);
  sink.label = *label;
  sink.kind = *kind;
  return sink;
}

}  // namespace

Result<ComponentManifest> ManifestFromJson(const json& j) {
  auto keys = ExpectKeys(j,
                         {"component_id", "code_digest", "input_labels",
                          "output_labels", "declassifiers", "egress_sinks"},
                         {}, "manifest");
  if (!keys.ok()) return Invalid(keys.error().message);

  ComponentManifest m;
  if (!j["component_id"].is_string()) return Invalid("component_id must be a string");
  m.component_id = j["component_id"].get<std::string>();

  const json& digest = j["code_digest"];
  if (digest.is_string() && !digest.get<std::string>().empty()) {
    const auto& hex = digest.get_ref<const std::string&>();
    if (std::any_of(hex.begin(), hex.end(), [](char c) { return c >= 'A' && c <= 'F'; })) {
      return Invalid("code_digest must be lowercase hex");
    }
    auto d = FromHexFixed<32>(hex);
    if (!d.ok()) return Invalid("code_digest: " + d.error().message);
    m.code_digest = *d;
  } else if (!digest.is_null() && !digest.is_string()) {
    return Invalid("code_digest must be a hex string");
  }

  ZKG_ASSIGN_OR_RETURN(m.input_labels, LabelSetFromJson(j["input_labels"], "input_labels"));
  ZKG_ASSIGN_OR_RETURN(m.output_labels,
                       LabelSetFromJson(j["output_labels"], "output_labels"));

  if (!j["declassifiers"].is_array()) return Invalid("declassifiers must be an array");
  for (const auto& item : j["declassifiers"]) {
    ZKG_ASSIGN_OR_RETURN(auto decl, DeclassifierFromJson(item));
    m.declassifiers.push_back(decl);
  }
  if (!j["egress_sinks"].is_array()) return Invalid("egress_sinks must be an array");
  for (const auto& item : j["egress_sinks"]) {
    ZKG_ASSIGN_OR_RETURN(auto sink, SinkFromJson(item));
    m.egress_sinks.push_back(std::move(sink));
  }
  ZKG_RETURN_IF_ERROR(ValidateManifest(m));
  return m;
}

json ManifestToJson(const ComponentManifest& manifest) {
  json j;
  j["component_id"] = manifest.component_id;
  j["code_digest"] = manifest.code_digest ? ToHex(*manifest.code_digest) : "";
  auto labels = [](const std::set<DataLabel>& set) {
    json arr = json::array();
    for (DataLabel l : set) arr.push_back(std::string(policy::LabelName(l)));
    return arr;
  };
  j["input_labels"] = labels(manifest.input_labels);
  j["output_labels"] = labels(manifest.output_labels);
  j["declassifiers"] = json::array();
  for (const auto& d : manifest.declassifiers) {
    json dj;
    dj["kind"] = std::string(policy::DeclassifierKindName(d.kind));
    dj["input_label"] = std::string(policy::LabelName(d.input_label));
    dj["output_label"] = std::string(policy::LabelName(d.output_label));
    if (d.kind == policy::DeclassifierKind::kAggregateK) dj["k"] = d.k;
    j["declassifiers"].push_back(dj);
  }
  j["egress_sinks"] = json::array();
  for (const auto& s : manifest.egress_sinks) {
    j["egress_sinks"].push_back({{"sink_id", s.sink_id},
                                 {"label", std::string(policy::LabelName(s.label))},
                                 {"kind", std::string(policy::SinkKindName(s.kind))}});
  }
  return j;
}

Result<ComponentManifest> LoadManifest(const std::filesystem::path& path) {
  ZKG_ASSIGN_OR_RETURN(json j, ReadJsonFile(path));
  return ManifestFromJson(j);
}

}  // namespace zkg::enclave

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

#include "zkg/base/io.h"

#include <fstream>
#include <iterator>

namespace zkg {

Result<Bytes> ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(Errc::kIoError, "cannot open " + path.string());
  }
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    return MakeError(Errc::kIoError, "read failed: " + path.string());
  }
  return data;
}

Result<std::string> ReadFileText(const std::filesystem::path& path) {
  ZKG_ASSIGN_OR_RETURN(Bytes data, ReadFileBytes(path));
  return std::string(data.begin(), data.end());
}

Status WriteFileBytes(const std::filesystem::path& path, ByteView bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return MakeError(Errc::kIoError, "cannot create " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    return MakeError(Errc::kIoError, "write failed: " + path.string());
  }
  return OkStatus();
}

Status WriteFileText(const std::filesystem::path& path, std::string_view text) {
  return WriteFileBytes(path, AsBytes(text));
}

Result<nlohmann::json> ParseJson(std::string_view text) {
  auto j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    return MakeError(Errc::kParseError, "malformed JSON");
  }
  return j;
}

Result<nlohmann::json> ReadJsonFile(const std::filesystem::path& path) {
  ZKG_ASSIGN_OR_RETURN(std::string text, ReadFileText(path));
  auto j = ParseJson(text);
  if (!j.ok()) {
    return MakeError(Errc::kParseError, "malformed JSON in " + path.string());
  }
  return j;
}

Status ExpectKeys(const nlohmann::json& j,
                  std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional,
                  std::string_view what) {
  if (!j.is_object()) {
    return MakeError(Errc::kParseError, std::string(what) + " must be a JSON object");
  }
  for (std::string_view key : required) {
    if (!j.contains(key)) {
      return MakeError(Errc::kParseError,
                       std::string(what) + " is missing field '" + std::string(key) + "'");
    }
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (std::string_view k : required) known = known || k == key;
    for (std::string_view k : optional) known = known || k == key;
    if (!known) {
      return MakeError(Errc::kParseError,
                       std::string(what) + " has unknown field '" + key + "'");
    }
  }
  return OkStatus();
}

}  // namespace zkg

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

#ifndef ZKG_BASE_IO_H_
#define ZKG_BASE_IO_H_

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>

#include "json.hpp"
#include "zkg/base/bytes.h"
#include "zkg/base/result.h"

namespace zkg {

Result<Bytes> ReadFileBytes(const std::filesystem::path& path);
Result<std::string> ReadFileText(const std::filesystem::path& path);
Status WriteFileBytes(const std::filesystem::path& path, ByteView bytes);
Status WriteFileText(const std::filesystem::path& path, std::string_view text);

// kIoError when the file cannot be read, kParseError when it is not JSON.
Result<nlohmann::json> ReadJsonFile(const std::filesystem::path& path);
Result<nlohmann::json> ParseJson(std::string_view text);

// Requires `j` to be an object whose keys are exactly `required` plus any
// subset of `optional`.
Status ExpectKeys(const nlohmann::json& j,
                  std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional,
                  std::string_view what);

}  // namespace zkg

#endif  // ZKG_BASE_IO_H_

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

#ifndef ZKG_TESTS_SUPPORT_TEST_PATHS_H_
#define ZKG_TESTS_SUPPORT_TEST_PATHS_H_

#include <filesystem>
#include <string>

#include <unistd.h>

namespace zkg::testing {

inline std::filesystem::path FixturePath(const std::string& name) {
  return std::filesystem::path(ZKG_FIXTURE_DIR) / name;
}

inline std::filesystem::path DataPath(const std::string& name) {
  return std::filesystem::path(ZKG_DATA_DIR) / name;
}

// Fresh, empty directory under the system temp dir.
inline std::filesystem::path MakeTempDir(const std::string& prefix) {
  static int counter = 0;
  auto base = std::filesystem::temp_directory_path();
  for (;;) {
    auto dir = base / (prefix + "-" + std::to_string(::getpid()) + "-" +
                       std::to_string(counter++));
    if (std::filesystem::create_directories(dir)) return dir;
  }
}

}  // namespace zkg::testing

#endif  // ZKG_TESTS_SUPPORT_TEST_PATHS_H_

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

// Integer-only table shuffleboard. Every quantity is an integer and every
// rounding step is fixed, so an outcome computed here is bit-identical on
// any platform and in any language that follows the same steps. No floating
// point may appear in this module.

#ifndef ZKG_SHUFFLEPUCK_PHYSICS_H_
#define ZKG_SHUFFLEPUCK_PHYSICS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "zkg/base/bytes.h"
#include "zkg/base/result.h"

namespace zkg::shufflepuck {

// Protocol version 1 geometry. Units are abstract table units.
struct TableSpec {
  int64_t length = 10000;
  int64_t width = 5000;
  int64_t defender_line = 9500;
  int64_t paddle_reach = 400;
  int64_t start_x = 2500;
  // Zone bands on resting y: [8000, 9000) 1pt, [9000, 9600) 2pt,
  // [9600, 10000] 3pt. Beyond length is off the table.
  int64_t zone1_start = 8000;
  int64_t zone2_start = 9000;
  int64_t zone3_start = 9600;
  int32_t max_angle_ddeg = 600;
  int32_t min_force = 1;
  int32_t max_force = 1000;
};

inline constexpr TableSpec kTableV1{};
inline constexpr int64_t kTrigScale = 1'000'000;

// round(sin(i / 10 degrees) * 1e6) for i in [0, 900]; also shipped as
// data/sintab.v1.txt.
inline constexpr std::array<int32_t, 901> kSinTab =
#include "zkg/shufflepuck/sintab_v1.inc"
    ;

struct Shot {
  int32_t angle_ddeg = 0;  // deci-degrees from the table axis, signed
  int32_t force = 1;

  friend bool operator==(const Shot&, const Shot&) = default;
};

struct Defense {
  int32_t paddle_x = 0;

  friend bool operator==(const Defense&, const Defense&) = default;
};

Status ValidateShot(const Shot& shot, const TableSpec& table = kTableV1);
Status ValidateDefense(const Defense& defense, const TableSpec& table = kTableV1);

enum class OutcomeKind : uint8_t {
  kBlocked = 0,
  kScored = 1,
  kOffTable = 2,
  kShortOfZones = 3,
};

std::string_view OutcomeKindName(OutcomeKind kind);

struct ShotOutcome {
  OutcomeKind kind = OutcomeKind::kShortOfZones;
  uint8_t points = 0;  // 1..3 when kScored, else 0
  // Resting point; absent for kBlocked.
  std::optional<int64_t> final_x;
  std::optional<int64_t> final_y;

  // kind u8 | points u8 | has_position u8 | final_x i64 | final_y i64
  Bytes Encode() const;
  static Result<ShotOutcome> Read(ByteReader& reader);

  friend bool operator==(const ShotOutcome&, const ShotOutcome&) = default;
};

// Intermediate values of one resolution, exposed for tests and the oracle
// comparison.
struct ShotTrace {
  int64_t path_length = 0;  // s
  int64_t sin_scaled = 0;
  int64_t cos_scaled = 0;
  int64_t cross_distance = 0;  // d_cross
  bool crosses_defender_line = false;
  std::optional<int64_t> x_cross;
  ShotOutcome outcome;
};

// s(F) = floor(3 F^2 / 100).
constexpr int64_t PathLength(int32_t force) {
  return 3 * static_cast<int64_t>(force) * force / 100;
}

// Reflects x into [0, width] as an even, 2*width-periodic triangle wave.
constexpr int64_t Fold(int64_t x, int64_t width) {
  const int64_t period = 2 * width;
  int64_t m = x % period;
  if (m < 0) m += period;
  return m <= width ? m : period - m;
}

// sin and cos of a deci-degree angle, scaled by 1e6. |angle| <= 900.
int64_t SinScaled(int32_t angle_ddeg);
int64_t CosScaled(int32_t angle_ddeg);

Result<ShotTrace> TraceShot(const TableSpec& table, int64_t start_x, const Shot& shot,
                            const Defense& defense);

Result<ShotOutcome> ResolveShot(const TableSpec& table, int64_t start_x, const Shot& shot,
                                const Defense& defense);

}  // namespace zkg::shufflepuck

#endif  // ZKG_SHUFFLEPUCK_PHYSICS_H_

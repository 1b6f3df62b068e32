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

#include "zkg/shufflepuck/physics.h"

#include <cstdlib>
#include <string>

namespace zkg::shufflepuck {

Status ValidateShot(const Shot& shot, const TableSpec& table) {
  if (shot.angle_ddeg < -table.max_angle_ddeg || shot.angle_ddeg > table.max_angle_ddeg) {
    return MakeError(Errc::kOutOfRange, "angle " + std::to_string(shot.angle_ddeg) +
                                            " outside +-" +
                                            std::to_string(table.max_angle_ddeg));
  }
  if (shot.force < table.min_force || shot.force > table.max_force) {
    return MakeError(Errc::kOutOfRange, "force " + std::to_string(shot.force) + " outside " +
                                            std::to_string(table.min_force) + ".." +
                                            std::to_string(table.max_force));
  }
  return OkStatus();
}

Status ValidateDefense(const Defense& defense, const TableSpec& table) {
  if (defense.paddle_x < 0 || defense.paddle_x > table.width) {
    return MakeError(Errc::kOutOfRange,
                     "paddle_x " + std::to_string(defense.paddle_x) + " outside 0.." +
                         std::to_string(table.width));
  }
  return OkStatus();
}

std::string_view OutcomeKindName(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kBlocked: return "Blocked";
    case OutcomeKind::kScored: return "Scored";
    case OutcomeKind::kOffTable: return "OffTable";
    case OutcomeKind::kShortOfZones: return "ShortOfZones";
  }
  return "?";
}

Bytes ShotOutcome::Encode() const {
  ByteWriter w;
  bool has_position = final_x.has_value() && final_y.has_value();
  w.U8(static_cast<uint8_t>(kind))
      .U8(points)
      .U8(has_position ? 1 : 0)
      .I64(has_position ? *final_x : 0)
      .I64(has_position ? *final_y : 0);
  return std::move(w).Take();
}

Result<ShotOutcome> ShotOutcome::Read(ByteReader& reader) {
  ShotOutcome o;
  ZKG_ASSIGN_OR_RETURN(uint8_t kind, reader.U8());
  if (kind > static_cast<uint8_t>(OutcomeKind::kShortOfZones)) {
    return MakeError(Errc::kParseError, "invalid outcome kind");
  }
  o.kind = static_cast<OutcomeKind>(kind);
  ZKG_ASSIGN_OR_RETURN(o.points, reader.U8());
  ZKG_ASSIGN_OR_RETURN(uint8_t has_position, reader.U8());
  ZKG_ASSIGN_OR_RETURN(int64_t x, reader.I64());
  ZKG_ASSIGN_OR_RETURN(int64_t y, reader.I64());
  if (has_position > 1) return MakeError(Errc::kParseError, "invalid position flag");
  if (has_position == 1) {
    o.final_x = x;
    o.final_y = y;
  }
  bool scored = o.kind == OutcomeKind::kScored;
  if ((scored && (o.points < 1 || o.points > 3)) || (!scored && o.points != 0) ||
      ((o.kind == OutcomeKind::kBlocked) == (has_position == 1))) {
    return MakeError(Errc::kParseError, "inconsistent outcome");
  }
  return o;
}

int64_t SinScaled(int32_t angle_ddeg) {
  int64_t v = kSinTab[static_cast<size_t>(std::abs(angle_ddeg))];
  return angle_ddeg < 0 ? -v : v;
}

int64_t CosScaled(int32_t angle_ddeg) {
  return kSinTab[static_cast<size_t>(900 - std::abs(angle_ddeg))];
}

namespace {

// floor(distance * |sin| / 1e6) carrying the sign of the angle. Flooring the
// magnitude keeps the dynamics exactly mirror-symmetric about the axis.
int64_t LateralOffset(int64_t distance, int64_t sin_scaled) {
  int64_t magnitude = distance * std::llabs(sin_scaled) / kTrigScale;
  return sin_scaled < 0 ? -magnitude : magnitude;
}

}  // namespace

Result<ShotTrace> TraceShot(const TableSpec& table, int64_t start_x, const Shot& shot,
                            const Defense& defense) {
  ZKG_RETURN_IF_ERROR(ValidateShot(shot, table));
  ZKG_RETURN_IF_ERROR(ValidateDefense(defense, table));
  if (start_x < 0 || start_x > table.width) {
    return MakeError(Errc::kOutOfRange, "start_x outside the table");
  }

  ShotTrace t;
  t.path_length = PathLength(shot.force);
  t.sin_scaled = SinScaled(shot.angle_ddeg);
  t.cos_scaled = CosScaled(shot.angle_ddeg);
  // ceil(yD * 1e6 / cos); cos >= sin(30 deg) > 0 over the legal angle range.
  const int64_t numerator = table.defender_line * kTrigScale;
  t.cross_distance = (numerator + t.cos_scaled - 1) / t.cos_scaled;
  t.crosses_defender_line = t.path_length >= t.cross_distance;

  if (t.crosses_defender_line) {
    t.x_cross = Fold(start_x + LateralOffset(t.cross_distance, t.sin_scaled), table.width);
    if (std::llabs(*t.x_cross - defense.paddle_x) <= table.paddle_reach) {
      t.outcome.kind = OutcomeKind::kBlocked;
      return t;
    }
  }

  const int64_t final_y = t.path_length * t.cos_scaled / kTrigScale;
  const int64_t final_x =
      Fold(start_x + LateralOffset(t.path_length, t.sin_scaled), table.width);
  t.outcome.final_x = final_x;
  t.outcome.final_y = final_y;
  if (final_y > table.length) {
    t.outcome.kind = OutcomeKind::kOffTable;
  } else if (final_y >= table.zone3_start) {
    t.outcome.kind = OutcomeKind::kScored;
    t.outcome.points = 3;
  } else if (final_y >= table.zone2_start) {
    t.outcome.kind = OutcomeKind::kScored;
    t.outcome.points = 2;
  } else if (final_y >= table.zone1_start) {
    t.outcome.kind = OutcomeKind::kScored;
    t.outcome.points = 1;
  } else {
    t.outcome.kind = OutcomeKind::kShortOfZones;
  }
  return t;
}

Result<ShotOutcome> ResolveShot(const TableSpec& table, int64_t start_x, const Shot& shot,
                                const Defense& defense) {
  ZKG_ASSIGN_OR_RETURN(ShotTrace t, TraceShot(table, start_x, shot, defense));
  return t.outcome;
}

}  // namespace zkg::shufflepuck

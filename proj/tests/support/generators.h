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

// Hand-rolled generators for property tests. All draws come from
// std::mt19937_64 and are mapped with plain modular arithmetic so a seed
// reproduces the same cases on every standard library.

#ifndef ZKG_TESTS_SUPPORT_GENERATORS_H_
#define ZKG_TESTS_SUPPORT_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zkg/base/bytes.h"
#include "zkg/enclave/manifest.h"
#include "zkg/policy/labels.h"

namespace zkg::testing {

class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  uint64_t Next() { return rng_(); }
  // Uniform-ish integer in [lo, hi].
  int64_t Int(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(rng_() % static_cast<uint64_t>(hi - lo + 1));
  }
  bool Bool() { return rng_() & 1; }

  Bytes RandomBytes(size_t n) {
    Bytes out(n);
    for (auto& b : out) b = static_cast<uint8_t>(rng_());
    return out;
  }

  std::string Id(size_t max_len = 16) {
    static constexpr char kChars[] =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-_";
    std::string s(static_cast<size_t>(Int(1, static_cast<int64_t>(max_len))), 'a');
    for (auto& c : s) c = kChars[rng_() % (sizeof(kChars) - 1)];
    return s;
  }

  policy::DataLabel Label() {
    return static_cast<policy::DataLabel>(Int(0, 5));
  }

  enclave::ComponentManifest Manifest() {
    enclave::ComponentManifest m;
    m.component_id = Id();
    if (Bool()) {
      Digest d{};
      for (auto& b : d) b = static_cast<uint8_t>(rng_());
      m.code_digest = d;
    }
    for (int i = Int(0, 4); i > 0; --i) m.input_labels.insert(Label());
    for (int i = Int(0, 4); i > 0; --i) m.output_labels.insert(Label());
    if (Bool()) m.declassifiers.push_back({policy::DeclassifierKind::kPseudonymize,
                                           policy::DataLabel::kPlayerIdentity,
                                           policy::DataLabel::kPseudonymous, 0});
    if (Bool()) {
      m.declassifiers.push_back({policy::DeclassifierKind::kAggregateK,
                                 static_cast<policy::DataLabel>(Int(2, 5)),
                                 policy::DataLabel::kAggregate,
                                 static_cast<uint32_t>(Int(2, 50))});
    }
    for (int i = Int(0, 3); i > 0; --i) {
      m.egress_sinks.push_back({"sink" + std::to_string(i) + "-" + Id(8), Label(),
                                Bool() ? policy::SinkKind::kNetwork
                                       : policy::SinkKind::kPersistence});
    }
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

// Changes exactly one byte of a tamperable field (component id, code digest,
// a sink id, or an AggregateK k) so that the manifest stays valid but
// differs from the original.
inline enclave::ComponentManifest TamperOneByte(const enclave::ComponentManifest& original,
                                                Gen& gen) {
  static constexpr char kIdChars[] =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-_";
  for (;;) {
    enclave::ComponentManifest m = original;
    std::vector<uint8_t*> slots;
    std::vector<bool> is_id;
    for (auto& c : m.component_id) {
      slots.push_back(reinterpret_cast<uint8_t*>(&c));
      is_id.push_back(true);
    }
    if (m.code_digest) {
      for (auto& b : *m.code_digest) {
        slots.push_back(&b);
        is_id.push_back(false);
      }
    }
    for (auto& sink : m.egress_sinks) {
      for (auto& c : sink.sink_id) {
        slots.push_back(reinterpret_cast<uint8_t*>(&c));
        is_id.push_back(true);
      }
    }
    for (auto& d : m.declassifiers) {
      if (d.kind != policy::DeclassifierKind::kAggregateK) continue;
      for (int i = 0; i < 4; ++i) {
        slots.push_back(reinterpret_cast<uint8_t*>(&d.k) + i);
        is_id.push_back(false);
      }
    }
    size_t pick = static_cast<size_t>(gen.Int(0, static_cast<int64_t>(slots.size()) - 1));
    uint8_t before = *slots[pick];
    if (is_id[pick]) {
      do {
        *slots[pick] = static_cast<uint8_t>(kIdChars[gen.Next() % (sizeof(kIdChars) - 1)]);
      } while (*slots[pick] == before);
    } else {
      *slots[pick] ^= static_cast<uint8_t>(gen.Int(1, 255));
    }
    if (enclave::ValidateManifest(m).ok() && !(m == original)) return m;
  }
}

}  // namespace zkg::testing

#endif  // ZKG_TESTS_SUPPORT_GENERATORS_H_

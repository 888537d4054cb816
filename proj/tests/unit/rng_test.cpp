// Copyright 2026 The gasched Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "gasched/rng.hpp"

using gasched::SplitMix64;

TEST_CASE("splitmix64: same seed, same stream") {
  SplitMix64 a(123456789), b(123456789);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
}

TEST_CASE("splitmix64: doubles live in [0,1)") {
  SplitMix64 rng(5);
  for (int i = 0; i < 10000; ++i) {
    double d = rng.next_double();
    CHECK(d >= 0.0);
    CHECK(d < 1.0);
  }
}

TEST_CASE("splitmix64: next_below stays in range and covers it") {
  SplitMix64 rng(6);
  bool seen[7] = {};
  for (int i = 0; i < 5000; ++i) {
    auto v = rng.next_below(7);
    REQUIRE(v < 7);
    seen[v] = true;
  }
  for (bool b : seen) CHECK(b);
}

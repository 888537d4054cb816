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

#ifndef GASCHED_GENERATE_HPP
#define GASCHED_GENERATE_HPP

#include <cstdint>

#include "gasched/domain.hpp"

namespace gasched {

/// Desk-scale synthetic instances shaped like the real department term:
/// 4-unit standalone lectures, 3-unit lectures with two associated 2-unit
/// labs, meeting grids inside the 8am-6pm day, and survey weights that
/// normalize to 1. Mandated units carry a small slack over the section
/// units so a full assignment is plausible. Deterministic per seed.
struct GenParams {
  int n_professors = 52;
  int n_sections = 155;
  double lecture_lab_ratio = 0.45;  // fraction of sections that are lectures
  std::uint64_t seed = 1;
  double preference_density = 0.8;  // fraction of professors lodging preferences
};

Instance generate_instance(const GenParams& params);

}  // namespace gasched

#endif  // GASCHED_GENERATE_HPP

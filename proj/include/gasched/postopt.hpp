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

#ifndef GASCHED_POSTOPT_HPP
#define GASCHED_POSTOPT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gasched/domain.hpp"

namespace gasched {

// Audit searches over a finished schedule. Everything here is advisory:
// finders are pure, return deterministic suggestion lists, and applying a
// suggestion is an explicit separate step that re-checks the hard
// constraints.

struct Conflict {
  std::int32_t professor = -1;
  std::int32_t first = -1;   // section indices, first < second
  std::int32_t second = -1;

  bool operator==(const Conflict&) const = default;
};

enum class SwapKind { RoomSwap, AssocRecombine, PrepReduce };

/// One atomic relocation. Professor moves leave the room fields empty;
/// room moves leave the professor fields at -1.
struct SwapMove {
  std::int32_t section = -1;
  std::int32_t from_professor = -1;
  std::int32_t to_professor = -1;
  std::string from_room;
  std::string to_room;
};

struct SwapSuggestion {
  SwapKind kind = SwapKind::RoomSwap;
  std::vector<SwapMove> moves;
  std::string rationale;
  /// Sections printed in the paper-style listing, in presentation order
  /// (for a room swap: the back-to-back pair, then the counterpart class).
  std::vector<std::int32_t> display_sections;
};

/// Same-professor section pairs that clash in time. Empty for anything the
/// GA built; populated only for hand-edited or corrupted schedules.
std::vector<Conflict> find_conflicts(const Schedule& s, const Instance& inst);

/// A professor teaching back-to-back classes in two rooms, while another
/// professor's class at one of those times sits in the other room: swapping
/// the two same-time classes between rooms keeps the first professor in a
/// single room. Fitness never changes (rooms are not scored).
std::vector<SwapSuggestion> find_room_swaps(const Schedule& s, const Instance& inst);

/// Equal-unit section exchanges between two professors that strictly lower
/// the total broken-association penalty without breaking hard constraints.
std::vector<SwapSuggestion> find_assoc_recombinations(const Schedule& s, const Instance& inst);

/// Equal-unit section exchanges that strictly lower the two professors'
/// combined count of distinct course preparations.
std::vector<SwapSuggestion> find_prep_reductions(const Schedule& s, const Instance& inst);

/// All three searches merged, in the order room swaps, association
/// recombinations, prep reductions.
std::vector<SwapSuggestion> find_all_suggestions(const Schedule& s, const Instance& inst);

/// New schedule with the moves applied. Throws StaleSuggestionError when
/// the schedule no longer matches the suggestion's preconditions or the
/// result would violate a hard constraint.
Schedule apply_swap(const Schedule& s, const Instance& inst, const SwapSuggestion& suggestion);

/// One class in the paper's audit style:
/// `phys-123-1 is mwf [10,10,11,0] in room_053_0202 (prof1)`.
std::string describe_class_line(const Instance& inst, const Schedule& s, int section);

/// Rationale line followed by the display sections' class lines.
std::string format_suggestion(const Instance& inst, const Schedule& s,
                              const SwapSuggestion& suggestion);

}  // namespace gasched

#endif  // GASCHED_POSTOPT_HPP

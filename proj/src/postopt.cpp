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

#include "gasched/postopt.hpp"

#include <algorithm>

#include "tokens.hpp"

namespace gasched {

namespace {

// The `hour_before_or_after` notion: identical day pattern, second class
// starting within a passing period (up to 15 minutes) of the first one's
// end. The department's real slots carry a 10-minute passing gap
// (10:10-11:00 then 11:10-12:00), so exact end==start would miss them.
constexpr int kPassingPeriodMin = 15;

bool back_to_back(const TimeBlock& first, const TimeBlock& second) {
  if (first.days != second.days) return false;
  int gap = second.start - first.end;
  return gap >= 0 && gap <= kPassingPeriodMin;
}

bool same_times(const TimeBlock& a, const TimeBlock& b) {
  return a.start == b.start && a.end == b.end;
}

std::string class_token(const Instance& inst, int section) {
  const Section& sec = inst.sections()[section];
  return detail::lower_atom(sec.course, "course") + "-" + std::to_string(sec.section_no);
}

/// Held sections sorted by index, for deterministic pair enumeration.
std::vector<std::int32_t> held_sorted(const Schedule& s, int prof) {
  std::vector<std::int32_t> held = s.sections_of(prof);
  std::sort(held.begin(), held.end());
  return held;
}

int assoc_penalty(const Instance& inst, const std::vector<std::int32_t>& held) {
  int missing = 0;
  std::vector<std::pair<int, int>> group_held;
  for (std::int32_t sec : held) {
    int gid = inst.group_of(sec);
    if (gid < 0) continue;
    auto it = std::find_if(group_held.begin(), group_held.end(),
                           [gid](const auto& e) { return e.first == gid; });
    if (it == group_held.end()) {
      group_held.emplace_back(gid, 1);
    } else {
      ++it->second;
    }
  }
  for (const auto& [gid, count] : group_held) {
    missing += static_cast<int>(inst.group_members(gid).size()) - count;
  }
  return missing;
}

int prep_count(const Instance& inst, const std::vector<std::int32_t>& held) {
  std::vector<std::int32_t> courses;
  courses.reserve(held.size());
  for (std::int32_t sec : held) courses.push_back(inst.section_course(sec));
  std::sort(courses.begin(), courses.end());
  courses.erase(std::unique(courses.begin(), courses.end()), courses.end());
  return static_cast<int>(courses.size());
}

std::vector<std::int32_t> with_exchanged(const std::vector<std::int32_t>& held, int give,
                                         int take) {
  std::vector<std::int32_t> out;
  out.reserve(held.size());
  for (std::int32_t sec : held) {
    out.push_back(sec == give ? take : sec);
  }
  return out;
}

/// True when handing `give` away and taking `take` keeps the professor's
/// remaining schedule free of time conflicts.
bool exchange_conflict_free(const Schedule& s, const Instance& inst, int prof, int give,
                            int take) {
  const TimeBlock& incoming = inst.sections()[take].meeting;
  for (std::int32_t held : s.sections_of(prof)) {
    if (held == give) continue;
    if (overlaps(incoming, inst.sections()[held].meeting)) return false;
  }
  return true;
}

SwapMove professor_move(int section, int from, int to) {
  SwapMove m;
  m.section = section;
  m.from_professor = from;
  m.to_professor = to;
  return m;
}

SwapMove room_move(int section, std::string from, std::string to) {
  SwapMove m;
  m.section = section;
  m.from_room = std::move(from);
  m.to_room = std::move(to);
  return m;
}

// Canonical listing order: professor id, then course, then section of the
// anchor class, with the remaining display sections breaking ties.
void sort_suggestions(const Schedule& s, const Instance& inst,
                      std::vector<SwapSuggestion>& suggestions) {
  auto key = [&](const SwapSuggestion& sug) {
    std::string out;
    for (std::int32_t sec : sug.display_sections) {
      int owner = s.owner_of(sec);
      out += owner < 0 ? std::string() : inst.professors()[owner].id;
      out += '\x1f';
      out += inst.sections()[sec].course;
      char no[16];
      std::snprintf(no, sizeof(no), "%06d", inst.sections()[sec].section_no);
      out += no;
      out += '\x1f';
    }
    return out;
  };
  std::stable_sort(suggestions.begin(), suggestions.end(),
                   [&](const SwapSuggestion& a, const SwapSuggestion& b) {
                     return key(a) < key(b);
                   });
}

/// Enumerates equal-unit exchanges between professor pairs that pass the
/// hard-constraint guards, and keeps those `improves` accepts.
template <typename Improves>
void enumerate_exchanges(const Schedule& s, const Instance& inst, Improves improves,
                         std::vector<SwapSuggestion>& out) {
  const int n = inst.professor_count();
  for (int p = 0; p < n; ++p) {
    const auto held_p = held_sorted(s, p);
    if (held_p.empty()) continue;
    for (int q = p + 1; q < n; ++q) {
      const auto held_q = held_sorted(s, q);
      for (std::int32_t sp : held_p) {
        for (std::int32_t sq : held_q) {
          if (inst.sections()[sp].units != inst.sections()[sq].units) continue;
          if (!exchange_conflict_free(s, inst, p, sp, sq)) continue;
          if (!exchange_conflict_free(s, inst, q, sq, sp)) continue;
          auto suggestion = improves(p, q, held_p, held_q, sp, sq);
          if (!suggestion.rationale.empty()) {
            suggestion.moves = {professor_move(sp, p, q), professor_move(sq, q, p)};
            suggestion.display_sections = {sp, sq};
            out.push_back(std::move(suggestion));
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<Conflict> find_conflicts(const Schedule& s, const Instance& inst) {
  std::vector<Conflict> out;
  for (int p = 0; p < inst.professor_count(); ++p) {
    const auto held = held_sorted(s, p);
    for (std::size_t i = 0; i < held.size(); ++i) {
      for (std::size_t j = i + 1; j < held.size(); ++j) {
        if (overlaps(inst.sections()[held[i]].meeting, inst.sections()[held[j]].meeting)) {
          out.push_back({p, held[i], held[j]});
        }
      }
    }
  }
  return out;
}

std::vector<SwapSuggestion> find_room_swaps(const Schedule& s, const Instance& inst) {
  std::vector<SwapSuggestion> out;
  for (int p1 = 0; p1 < inst.professor_count(); ++p1) {
    const auto held = held_sorted(s, p1);
    for (std::int32_t c1 : held) {
      for (std::int32_t c2 : held) {
        if (c1 == c2) continue;
        const TimeBlock& t1 = inst.sections()[c1].meeting;
        const TimeBlock& t2 = inst.sections()[c2].meeting;
        if (!back_to_back(t1, t2)) continue;
        const std::string& r1 = effective_room(inst, s, c1);
        const std::string& r2 = effective_room(inst, s, c2);
        if (r1 == r2) continue;
        for (int p2 = 0; p2 < inst.professor_count(); ++p2) {
          if (p2 == p1) continue;
          for (std::int32_t c : held_sorted(s, p2)) {
            const TimeBlock& tc = inst.sections()[c].meeting;
            if (tc.days != t1.days) continue;
            const std::string& rc = effective_room(inst, s, c);
            int moved = -1;  // the p1 class whose room is exchanged with c's
            if (same_times(tc, t1) && rc == r2) {
              moved = c1;
            } else if (same_times(tc, t2) && rc == r1) {
              moved = c2;
            }
            if (moved < 0) continue;
            const std::string& from = effective_room(inst, s, moved);
            SwapSuggestion sug;
            sug.kind = SwapKind::RoomSwap;
            sug.moves = {room_move(moved, from, rc), room_move(c, rc, from)};
            sug.rationale = "swap rooms of " + class_token(inst, moved) + " and " +
                            class_token(inst, c) + " so " +
                            detail::lower_atom(inst.professors()[p1].id, "professor") +
                            " stays in " + detail::room_atom(moved == c1 ? r2 : r1);
            sug.display_sections = {c1, c2, c};
            out.push_back(std::move(sug));
          }
        }
      }
    }
  }
  sort_suggestions(s, inst, out);
  return out;
}

std::vector<SwapSuggestion> find_assoc_recombinations(const Schedule& s, const Instance& inst) {
  std::vector<SwapSuggestion> out;
  enumerate_exchanges(
      s, inst,
      [&](int p, int q, const std::vector<std::int32_t>& held_p,
          const std::vector<std::int32_t>& held_q, int sp, int sq) {
        SwapSuggestion sug;
        if (inst.group_of(sp) < 0 && inst.group_of(sq) < 0) return sug;
        int before = assoc_penalty(inst, held_p) + assoc_penalty(inst, held_q);
        int after = assoc_penalty(inst, with_exchanged(held_p, sp, sq)) +
                    assoc_penalty(inst, with_exchanged(held_q, sq, sp));
        if (after >= before) return sug;
        sug.kind = SwapKind::AssocRecombine;
        sug.rationale = "exchange " + class_token(inst, sp) + " (" +
                        detail::lower_atom(inst.professors()[p].id, "professor") + ") and " +
                        class_token(inst, sq) + " (" +
                        detail::lower_atom(inst.professors()[q].id, "professor") +
                        ") to rejoin associations, penalty " + std::to_string(before) +
                        " -> " + std::to_string(after);
        return sug;
      },
      out);
  sort_suggestions(s, inst, out);
  return out;
}

std::vector<SwapSuggestion> find_prep_reductions(const Schedule& s, const Instance& inst) {
  std::vector<SwapSuggestion> out;
  enumerate_exchanges(
      s, inst,
      [&](int p, int q, const std::vector<std::int32_t>& held_p,
          const std::vector<std::int32_t>& held_q, int sp, int sq) {
        SwapSuggestion sug;
        if (inst.section_course(sp) == inst.section_course(sq)) return sug;
        int before = prep_count(inst, held_p) + prep_count(inst, held_q);
        int after = prep_count(inst, with_exchanged(held_p, sp, sq)) +
                    prep_count(inst, with_exchanged(held_q, sq, sp));
        if (after >= before) return sug;
        sug.kind = SwapKind::PrepReduce;
        sug.rationale = "exchange " + class_token(inst, sp) + " (" +
                        detail::lower_atom(inst.professors()[p].id, "professor") + ") and " +
                        class_token(inst, sq) + " (" +
                        detail::lower_atom(inst.professors()[q].id, "professor") +
                        ") to cut course preparations, " + std::to_string(before) + " -> " +
                        std::to_string(after);
        return sug;
      },
      out);
  sort_suggestions(s, inst, out);
  return out;
}

std::vector<SwapSuggestion> find_all_suggestions(const Schedule& s, const Instance& inst) {
  std::vector<SwapSuggestion> out = find_room_swaps(s, inst);
  auto assoc = find_assoc_recombinations(s, inst);
  auto prep = find_prep_reductions(s, inst);
  out.insert(out.end(), std::make_move_iterator(assoc.begin()),
             std::make_move_iterator(assoc.end()));
  out.insert(out.end(), std::make_move_iterator(prep.begin()),
             std::make_move_iterator(prep.end()));
  return out;
}

Schedule apply_swap(const Schedule& s, const Instance& inst, const SwapSuggestion& suggestion) {
  // Preconditions against the schedule as it is now.
  for (const SwapMove& m : suggestion.moves) {
    if (m.section < 0 || m.section >= inst.section_count()) {
      throw StaleSuggestionError("suggestion references an unknown section");
    }
    if (m.from_professor >= 0) {
      if (s.owner_of(m.section) != m.from_professor) {
        throw StaleSuggestionError("stale suggestion: " +
                                   inst.sections()[m.section].course + "-" +
                                   std::to_string(inst.sections()[m.section].section_no) +
                                   " is no longer where the suggestion expects it");
      }
    } else if (effective_room(inst, s, m.section) != m.from_room) {
      throw StaleSuggestionError("stale suggestion: room of " +
                                 inst.sections()[m.section].course + "-" +
                                 std::to_string(inst.sections()[m.section].section_no) +
                                 " changed since the suggestion was generated");
    }
  }

  Schedule out = s;
  for (const SwapMove& m : suggestion.moves) {
    if (m.from_professor >= 0) out.unassign(m.section);
  }
  for (const SwapMove& m : suggestion.moves) {
    if (m.from_professor >= 0) {
      out.assign(m.to_professor, m.section);
    } else if (m.to_room == inst.sections()[m.section].room) {
      out.clear_room_override(m.section);
    } else {
      out.set_room_override(m.section, m.to_room);
    }
  }

  // Hard constraints must survive the application.
  std::vector<std::int32_t> touched;
  for (const SwapMove& m : suggestion.moves) {
    if (m.from_professor >= 0) {
      touched.push_back(m.from_professor);
      touched.push_back(m.to_professor);
    }
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (std::int32_t p : touched) {
    if (professor_load(out, inst, p) > inst.professors()[p].mandated_units) {
      throw StaleSuggestionError("applying the suggestion would exceed mandated units");
    }
    const auto held = out.sections_of(p);
    for (std::size_t i = 0; i < held.size(); ++i) {
      for (std::size_t j = i + 1; j < held.size(); ++j) {
        if (overlaps(inst.sections()[held[i]].meeting, inst.sections()[held[j]].meeting)) {
          throw StaleSuggestionError("applying the suggestion would create a time conflict");
        }
      }
    }
  }
  return out;
}

std::string describe_class_line(const Instance& inst, const Schedule& s, int section) {
  const Section& sec = inst.sections()[section];
  int owner = s.owner_of(section);
  std::string prof =
      owner < 0 ? "unassigned" : detail::lower_atom(inst.professors()[owner].id, "professor");
  const TimeBlock& t = sec.meeting;
  std::string days = format_days(t.days);
  for (char& c : days) c = static_cast<char>(c - 'A' + 'a');
  return class_token(inst, section) + " is " + days + " [" + std::to_string(t.start / 60) +
         "," + std::to_string(t.start % 60) + "," + std::to_string(t.end / 60) + "," +
         std::to_string(t.end % 60) + "] in " +
         detail::room_atom(effective_room(inst, s, section)) + " (" + prof + ")";
}

std::string format_suggestion(const Instance& inst, const Schedule& s,
                              const SwapSuggestion& suggestion) {
  const char* kind = "";
  switch (suggestion.kind) {
    case SwapKind::RoomSwap: kind = "room swap"; break;
    case SwapKind::AssocRecombine: kind = "association recombination"; break;
    case SwapKind::PrepReduce: kind = "prep reduction"; break;
  }
  std::string out = std::string(kind) + ": " + suggestion.rationale + "\n";
  for (std::int32_t section : suggestion.display_sections) {
    out += describe_class_line(inst, s, section);
    out += '\n';
  }
  return out;
}

}  // namespace gasched

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

#include "gasched/fitness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace gasched {

namespace {

constexpr double kGapNormalizerHours = 35.0;  // worst case: 7h idle, 5 days
constexpr int kNonMajorCourseTarget = 6;      // fixed denominator of the fav ratio
constexpr int kPrepNormalizer = 5;            // worst case: all six courses prepped

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

/// Weekly minutes the block spends on the wrong side of 1pm.
int nonpreferred_minutes(const TimeBlock& t, HalfChoice choice) {
  int per_day = 0;
  if (choice == HalfChoice::FirstHalf) {
    per_day = std::max(0, t.end - std::max(t.start, kMiddayMin));
  } else if (choice == HalfChoice::SecondHalf) {
    per_day = std::max(0, std::min(t.end, kMiddayMin) - t.start);
  }
  return per_day * day_count(t.days);
}

std::string format_number(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

ScheduleMeasures measure_professor(const Schedule& s, const Instance& inst, int professor) {
  ScheduleMeasures m;
  m.mandated_units = inst.professors()[professor].mandated_units;
  const ResolvedProfile& pref = inst.profile(professor);
  m.favorite_count = static_cast<int>(pref.favorite_courses.size());

  const auto& held = s.sections_of(professor);

  std::uint8_t eight_am_mask = 0;
  std::vector<std::int32_t> courses;
  std::vector<std::pair<std::int32_t, int>> group_held;  // group id -> members held
  courses.reserve(held.size());

  for (std::int32_t si : held) {
    const Section& sec = inst.sections()[si];
    m.assigned_units += sec.units;
    if (sec.meeting.start == kDayStartMin) eight_am_mask |= sec.meeting.days;
    m.total_hours += day_count(sec.meeting.days) * (sec.meeting.end - sec.meeting.start) / 60.0;
    m.nonpreferred_hours += nonpreferred_minutes(sec.meeting, pref.half_choice) / 60.0;
    courses.push_back(inst.section_course(si));
    int gid = inst.group_of(si);
    if (gid >= 0) {
      auto it = std::find_if(group_held.begin(), group_held.end(),
                             [gid](const auto& e) { return e.first == gid; });
      if (it == group_held.end()) {
        group_held.emplace_back(gid, 1);
      } else {
        ++it->second;
      }
    }
  }

  m.eight_am_days = day_count(eight_am_mask);

  std::sort(courses.begin(), courses.end());
  courses.erase(std::unique(courses.begin(), courses.end()), courses.end());
  m.distinct_courses = static_cast<int>(courses.size());
  for (std::int32_t c : courses) {
    if (!inst.course_nonmajor(c)) continue;
    if (!std::binary_search(pref.favorite_courses.begin(), pref.favorite_courses.end(), c)) {
      ++m.nonfavorite_courses;
    }
  }

  for (const auto& [gid, count] : group_held) {
    int size = static_cast<int>(inst.group_members(gid).size());
    if (count < size) m.missing_assoc_members += size - count;
  }

  // Idle time between consecutive classes, per weekday. Schedules that
  // reach here satisfy the no-overlap constraint, but clip at zero anyway
  // so corrupted fixtures stay finite.
  for (int d = 0; d < kWeekdayCount; ++d) {
    int prev_end = -1;
    int gap_minutes = 0;
    // Insertion order is arbitrary; collect the day's intervals sorted by start.
    std::vector<std::pair<int, int>> intervals;
    for (std::int32_t si : held) {
      const TimeBlock& t = inst.sections()[si].meeting;
      if (t.days & (1u << d)) intervals.emplace_back(t.start, t.end);
    }
    if (intervals.size() < 2) continue;
    std::sort(intervals.begin(), intervals.end());
    for (const auto& [start, end] : intervals) {
      if (prev_end >= 0) gap_minutes += std::max(0, start - prev_end);
      prev_end = std::max(prev_end, end);
    }
    m.gap_hours += gap_minutes / 60.0;
  }
  return m;
}

namespace {

ComponentBreakdown breakdown_from(const ScheduleMeasures& m, const ResolvedProfile& pref) {
  ComponentBreakdown b;
  int spare = m.mandated_units - m.assigned_units;
  if (spare < 0) {
    throw Error("assigned units exceed the mandated workload; hard constraint violated upstream");
  }
  b.d_units = spare;
  b.d_assoc = m.missing_assoc_members;
  b.d_8am = pref.w_8am * (m.eight_am_days / 5.0);
  if (pref.half_choice != HalfChoice::None && m.total_hours > 0.0) {
    b.d_half = pref.w_half * (m.nonpreferred_hours / m.total_hours);
  }
  if (m.nonfavorite_courses > 0 && m.favorite_count < kNonMajorCourseTarget) {
    b.d_fav = pref.w_fav * clamp01(static_cast<double>(m.nonfavorite_courses) /
                                   (kNonMajorCourseTarget - m.favorite_count));
  }
  b.d_gap = pref.w_gap * (std::min(m.gap_hours, kGapNormalizerHours) / kGapNormalizerHours);
  if (m.distinct_courses > 1) {
    b.d_prep = pref.w_prep *
               clamp01(static_cast<double>(m.distinct_courses - 1) / kPrepNormalizer);
  }
  b.f_p = b.d_units + b.d_assoc + b.d_8am + b.d_half + b.d_fav + b.d_gap + b.d_prep;
  return b;
}

}  // namespace

int delta_units(const Schedule& s, const Instance& inst, int professor) {
  int spare = inst.professors()[professor].mandated_units - professor_load(s, inst, professor);
  if (spare < 0) {
    throw Error("assigned units exceed the mandated workload; hard constraint violated upstream");
  }
  return spare;
}

int delta_assoc(const Schedule& s, const Instance& inst, int professor) {
  return measure_professor(s, inst, professor).missing_assoc_members;
}

double delta_8am(const Schedule& s, const Instance& inst, int professor) {
  return breakdown_from(measure_professor(s, inst, professor), inst.profile(professor)).d_8am;
}

double delta_half(const Schedule& s, const Instance& inst, int professor) {
  return breakdown_from(measure_professor(s, inst, professor), inst.profile(professor)).d_half;
}

double delta_fav(const Schedule& s, const Instance& inst, int professor) {
  return breakdown_from(measure_professor(s, inst, professor), inst.profile(professor)).d_fav;
}

double delta_gap(const Schedule& s, const Instance& inst, int professor) {
  return breakdown_from(measure_professor(s, inst, professor), inst.profile(professor)).d_gap;
}

double delta_prep(const Schedule& s, const Instance& inst, int professor) {
  return breakdown_from(measure_professor(s, inst, professor), inst.profile(professor)).d_prep;
}

double local_fitness(const Schedule& s, const Instance& inst, int professor) {
  return breakdown_from(measure_professor(s, inst, professor), inst.profile(professor)).f_p;
}

FitnessBreakdown global_fitness(const Schedule& s, const Instance& inst) {
  FitnessBreakdown out;
  out.per_professor.reserve(inst.professor_count());
  for (int p = 0; p < inst.professor_count(); ++p) {
    out.per_professor.push_back(breakdown_from(measure_professor(s, inst, p), inst.profile(p)));
    out.global_f += out.per_professor.back().f_p;
  }
  return out;
}

double global_fitness_value(const Schedule& s, const Instance& inst) {
  double f = 0.0;
  for (int p = 0; p < inst.professor_count(); ++p) {
    f += breakdown_from(measure_professor(s, inst, p), inst.profile(p)).f_p;
  }
  return f;
}

std::vector<std::string> explain(const Schedule& s, const Instance& inst, int professor) {
  const ScheduleMeasures m = measure_professor(s, inst, professor);
  const ResolvedProfile& pref = inst.profile(professor);
  const ComponentBreakdown b = breakdown_from(m, pref);

  auto weighted = [&](const char* name, double weight, const std::string& measure,
                      double delta) {
    if (weight == 0.0) {
      return std::string(name) + ": weight 0, no contribution, delta 0";
    }
    return std::string(name) + ": " + measure + ", weight " + format_number(weight) +
           ", delta " + format_number(delta);
  };

  std::vector<std::string> lines;
  lines.reserve(7);
  lines.push_back("units: mandated " + std::to_string(m.mandated_units) + ", assigned " +
                  std::to_string(m.assigned_units) + ", delta " + format_number(b.d_units));
  lines.push_back("assoc: " + std::to_string(m.missing_assoc_members) +
                  " missing associated section(s), delta " + format_number(b.d_assoc));
  lines.push_back(weighted("8am", pref.w_8am,
                           std::to_string(m.eight_am_days) + " of 5 day(s) with an 8am class",
                           b.d_8am));
  std::string half_measure =
      pref.half_choice == HalfChoice::None
          ? "no half-day choice lodged"
          : format_number(m.nonpreferred_hours) + " of " + format_number(m.total_hours) +
                " weekly hour(s) in the non-preferred half";
  lines.push_back(weighted("half", pref.w_half, half_measure, b.d_half));
  lines.push_back(weighted("fav", pref.w_fav,
                           std::to_string(m.nonfavorite_courses) +
                               " non-favorite course(s) against " +
                               std::to_string(m.favorite_count) + " favorite(s)",
                           b.d_fav));
  lines.push_back(weighted("gap", pref.w_gap,
                           format_number(m.gap_hours) + " weekly gap-hour(s)", b.d_gap));
  lines.push_back(weighted("prep", pref.w_prep,
                           std::to_string(m.distinct_courses) + " distinct course(s)",
                           b.d_prep));
  return lines;
}

}  // namespace gasched

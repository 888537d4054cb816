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

#include "gasched/generate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "gasched/rng.hpp"

namespace gasched {

namespace {

constexpr const char* kLectureOnlyCourses[] = {"PHYS-121", "PHYS-141"};
constexpr const char* kLectureLabCourses[] = {"PHYS-122", "PHYS-123", "PHYS-142", "PHYS-143"};
constexpr int kLabStarts[] = {8 * 60,  9 * 60,  10 * 60, 11 * 60,
                              12 * 60, 13 * 60, 14 * 60, 15 * 60};  // 3-hour slots

// Fraction of professors given room beyond their dealt bundle, so more
// than one full packing exists.
constexpr double kSpareRoomDensity = 0.15;

std::string room_id(SplitMix64& rng) {
  const char* building = rng.next_below(2) == 0 ? "180" : "053";
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%s-%04d", building,
                static_cast<int>(100 + rng.next_below(600)));
  return buf;
}

TimeBlock lecture_block(SplitMix64& rng, std::uint8_t days, int duration_min) {
  int latest_start = kDayEndMin - duration_min;
  int slots = (latest_start - kDayStartMin) / 60 + 1;
  TimeBlock t;
  t.days = days;
  t.start = kDayStartMin + 60 * static_cast<int>(rng.next_below(slots));
  t.end = t.start + duration_min;
  return t;
}

TimeBlock lab_block(SplitMix64& rng) {
  TimeBlock t;
  t.days = static_cast<std::uint8_t>(1u << rng.next_below(kWeekdayCount));
  t.start = kLabStarts[rng.next_below(std::size(kLabStarts))];
  t.end = t.start + 180;
  return t;
}

/// Lab slot that avoids the other members already in the group.
TimeBlock conflict_free_lab_block(SplitMix64& rng, const std::vector<TimeBlock>& taken) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    TimeBlock t = lab_block(rng);
    bool clash = false;
    for (const TimeBlock& other : taken) {
      if (overlaps(t, other)) clash = true;
    }
    if (!clash) return t;
  }
  // 64 misses over a 20-slot grid is practically impossible; fall back to
  // a slot disjoint from everything by construction.
  TimeBlock t;
  t.days = kFri;
  t.start = kLabStarts[3];
  t.end = t.start + 180;
  return t;
}

}  // namespace

Instance generate_instance(const GenParams& params) {
  if (params.n_professors < 1 || params.n_sections < 1) {
    throw Error("generator needs at least one professor and one section");
  }
  if (params.lecture_lab_ratio < 0.0 || params.lecture_lab_ratio > 1.0 ||
      params.preference_density < 0.0 || params.preference_density > 1.0) {
    throw Error("lecture_lab_ratio and preference_density must lie in [0,1]");
  }

  SplitMix64 rng(params.seed);
  const int n = params.n_professors;
  const int m = params.n_sections;

  // Section shapes: `groups` lecture+2-lab associations, the rest
  // standalone 4-unit lectures.
  int groups = static_cast<int>(std::lround((1.0 - params.lecture_lab_ratio) * m / 2.0));
  groups = std::clamp(groups, 0, m / 3);
  const int standalone = m - 3 * groups;

  std::vector<Section> sections;
  std::vector<AssociationGroup> associations;
  sections.reserve(m);
  std::vector<int> next_section_no(6, 1);
  auto course_slot = [](const char* course) -> int {
    // index into next_section_no; courses are fixed literals above
    static const char* all[] = {"PHYS-121", "PHYS-141", "PHYS-122",
                                "PHYS-123", "PHYS-142", "PHYS-143"};
    for (int i = 0; i < 6; ++i) {
      if (course == std::string_view(all[i])) return i;
    }
    return 0;
  };

  for (int g = 0; g < groups; ++g) {
    const char* course = kLectureLabCourses[g % std::size(kLectureLabCourses)];
    int base_no = next_section_no[course_slot(course)];
    next_section_no[course_slot(course)] += 3;

    Section lecture;
    lecture.course = course;
    lecture.section_no = base_no;
    lecture.units = 3;
    lecture.mode = SectionMode::Lecture;
    lecture.meeting = lecture_block(rng, kMon | kWed | kFri, 60);
    lecture.room = room_id(rng);

    AssociationGroup assoc;
    assoc.lecture = {lecture.course, lecture.section_no};

    std::vector<TimeBlock> taken{lecture.meeting};
    sections.push_back(lecture);
    for (int lab_i = 0; lab_i < 2; ++lab_i) {
      Section lab;
      lab.course = course;
      lab.section_no = base_no + 1 + lab_i;
      lab.units = 2;
      lab.mode = SectionMode::Laboratory;
      lab.meeting = conflict_free_lab_block(rng, taken);
      lab.room = room_id(rng);
      taken.push_back(lab.meeting);
      assoc.labs.push_back({lab.course, lab.section_no});
      sections.push_back(lab);
    }
    associations.push_back(std::move(assoc));
  }

  // Standalone lectures mix the Table III shapes: 4-unit four-day or
  // two-day doubles, and 3-unit MWF hours. The unit variety matters; with
  // only 4s and 7s most mandated workloads cannot be packed tightly.
  for (int i = 0; i < standalone; ++i) {
    const char* course = kLectureOnlyCourses[i % std::size(kLectureOnlyCourses)];
    Section lecture;
    lecture.course = course;
    lecture.section_no = next_section_no[course_slot(course)]++;
    lecture.mode = SectionMode::Lecture;
    switch (i % 3) {
      case 0:
        lecture.units = 4;
        lecture.meeting = lecture_block(rng, kMon | kTue | kWed | kThu, 60);
        break;
      case 1:
        lecture.units = 3;
        lecture.meeting = lecture_block(rng, kMon | kWed | kFri, 60);
        break;
      default:
        lecture.units = 4;
        lecture.meeting = lecture_block(rng, kTue | kThu, 120);
        break;
    }
    lecture.room = room_id(rng);
    sections.push_back(std::move(lecture));
  }

  // Workloads come from dealing the teaching items (whole associations,
  // standalone lectures) across the faculty, the way a real term is put
  // together: each professor's mandated units are the units of a concrete,
  // conflict-free bundle, so a full assignment exists by construction. A
  // slice of the faculty gets spare room on top, so the solver has more
  // than one packing to find.
  struct Item {
    std::vector<int> section_indices;
    int units = 0;
  };
  std::vector<Item> items;
  {
    std::vector<char> in_group(sections.size(), 0);
    for (const AssociationGroup& g : associations) {
      Item item;
      auto add = [&](const SectionRef& ref) {
        for (std::size_t i = 0; i < sections.size(); ++i) {
          if (sections[i].course == ref.course && sections[i].section_no == ref.section_no) {
            item.section_indices.push_back(static_cast<int>(i));
            item.units += sections[i].units;
            in_group[i] = 1;
          }
        }
      };
      add(g.lecture);
      for (const SectionRef& lab : g.labs) add(lab);
      items.push_back(std::move(item));
    }
    for (std::size_t i = 0; i < sections.size(); ++i) {
      if (!in_group[i]) {
        items.push_back({{static_cast<int>(i)}, sections[i].units});
      }
    }
    for (std::size_t i = items.size(); i > 1; --i) {  // Fisher-Yates
      std::swap(items[i - 1], items[rng.next_below(i)]);
    }
  }

  int section_units = 0;
  for (const Section& s : sections) section_units += s.units;

  std::vector<Professor> professors(n);
  int digits = static_cast<int>(std::to_string(n).size());
  for (int p = 0; p < n; ++p) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "prof%0*d", digits, p + 1);
    professors[p].id = buf;
  }

  {
    std::vector<int> dealt_units(n, 0);
    std::vector<std::vector<TimeBlock>> dealt_blocks(n);
    const int soft_cap = std::min(15, (section_units + n - 1) / n + 4);
    auto fits = [&](int p, const Item& item, int cap) {
      if (dealt_units[p] + item.units > cap) return false;
      for (int sec : item.section_indices) {
        for (const TimeBlock& held : dealt_blocks[p]) {
          if (overlaps(sections[sec].meeting, held)) return false;
        }
      }
      return true;
    };
    for (const Item& item : items) {
      int chosen = -1;
      int start = static_cast<int>(rng.next_below(n));
      for (int cap : {soft_cap, 15}) {
        for (int step = 0; step < n && chosen < 0; ++step) {
          int p = (start + step) % n;
          if (fits(p, item, cap)) chosen = p;
        }
        if (chosen >= 0) break;
      }
      if (chosen < 0) {
        // Nobody can host the item conflict-free (vanishingly rare); park
        // it on the lightest professor so the units still balance.
        chosen = 0;
        for (int p = 1; p < n; ++p) {
          if (dealt_units[p] < dealt_units[chosen]) chosen = p;
        }
      }
      dealt_units[chosen] += item.units;
      for (int sec : item.section_indices) {
        dealt_blocks[chosen].push_back(sections[sec].meeting);
      }
    }
    for (int p = 0; p < n; ++p) {
      int mandated = std::max(dealt_units[p], 2);
      if (rng.next_double() < kSpareRoomDensity) {
        mandated = std::min(15, mandated + 3);
      }
      professors[p].mandated_units = mandated;
    }
  }

  // Distinct courses present, for favorite picks.
  std::vector<std::string> courses;
  for (const Section& s : sections) {
    if (std::find(courses.begin(), courses.end(), s.course) == courses.end()) {
      courses.push_back(s.course);
    }
  }
  std::sort(courses.begin(), courses.end());

  std::vector<PreferenceProfile> preferences;
  for (int p = 0; p < n; ++p) {
    if (rng.next_double() >= params.preference_density) continue;
    PreferenceProfile pref;
    pref.owner = professors[p].id;
    double raw[5];
    double sum = 0.0;
    for (double& w : raw) {
      w = rng.next_double();
      sum += w;
    }
    if (sum <= 0.0) {
      raw[0] = 1.0;
      sum = 1.0;
    }
    pref.w_8am = raw[0] / sum;
    pref.w_half = raw[1] / sum;
    pref.w_fav = raw[2] / sum;
    pref.w_gap = raw[3] / sum;
    pref.w_prep = raw[4] / sum;
    switch (rng.next_below(3)) {
      case 0: pref.half_choice = HalfChoice::None; break;
      case 1: pref.half_choice = HalfChoice::FirstHalf; break;
      default: pref.half_choice = HalfChoice::SecondHalf; break;
    }
    std::vector<std::string> pool = courses;
    int favorites = static_cast<int>(rng.next_below(std::min<std::uint64_t>(4, pool.size() + 1)));
    for (int f = 0; f < favorites; ++f) {
      int pick = static_cast<int>(rng.next_below(pool.size()));
      pref.favorite_courses.push_back(pool[pick]);
      pool.erase(pool.begin() + pick);
    }
    std::sort(pref.favorite_courses.begin(), pref.favorite_courses.end());
    pref.avoid_8am = rng.next_below(2) == 1;
    preferences.push_back(std::move(pref));
  }

  return Instance::build(std::move(professors), std::move(sections), std::move(associations),
                         std::move(preferences), {});
}

}  // namespace gasched

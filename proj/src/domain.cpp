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

#include "gasched/domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gasched {

namespace {

constexpr char kDayLetters[kWeekdayCount] = {'M', 'T', 'W', 'R', 'F'};

constexpr double kWeightSumTolerance = 1e-9;

std::string section_label(const Section& s) {
  return s.course + "-" + std::to_string(s.section_no);
}

std::string ref_label(const SectionRef& r) {
  return r.course + "-" + std::to_string(r.section_no);
}

}  // namespace

// ---------------------------------------------------------------------------
// Time arithmetic
// ---------------------------------------------------------------------------

bool overlaps(const TimeBlock& a, const TimeBlock& b) {
  if ((a.days & b.days) == 0) return false;
  return a.start < b.end && b.start < a.end;
}

int day_count(std::uint8_t days) {
  int n = 0;
  for (int d = 0; d < kWeekdayCount; ++d) {
    if (days & (1u << d)) ++n;
  }
  return n;
}

std::string format_days(std::uint8_t days) {
  std::string out;
  for (int d = 0; d < kWeekdayCount; ++d) {
    if (days & (1u << d)) out.push_back(kDayLetters[d]);
  }
  return out;
}

std::optional<std::uint8_t> parse_days(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint8_t days = 0;
  for (char c : s) {
    int bit = -1;
    switch (c) {
      case 'M': case 'm': bit = 0; break;
      case 'T': case 't': bit = 1; break;
      case 'W': case 'w': bit = 2; break;
      case 'R': case 'r': bit = 3; break;
      case 'F': case 'f': bit = 4; break;
      default: return std::nullopt;
    }
    if (days & (1u << bit)) return std::nullopt;  // repeated day
    days |= 1u << bit;
  }
  return days;
}

std::string format_time(int minutes) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02d:%02d", minutes / 60, minutes % 60);
  return buf;
}

std::optional<int> parse_time(std::string_view s) {
  if (s.size() < 4 || s.size() > 5) return std::nullopt;
  std::size_t colon = s.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 3 != s.size()) {
    return std::nullopt;
  }
  int h = 0, m = 0;
  for (std::size_t i = 0; i < colon; ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    h = h * 10 + (s[i] - '0');
  }
  for (std::size_t i = colon + 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    m = m * 10 + (s[i] - '0');
  }
  if (h > 23 || m > 59) return std::nullopt;
  return h * 60 + m;
}

// ---------------------------------------------------------------------------
// Instance
// ---------------------------------------------------------------------------

Instance Instance::build(std::vector<Professor> professors, std::vector<Section> sections,
                         std::vector<AssociationGroup> associations,
                         std::vector<PreferenceProfile> preferences,
                         std::vector<PreAssignment> pre_assignments) {
  Instance inst;
  inst.professors_ = std::move(professors);
  inst.sections_ = std::move(sections);
  inst.associations_ = std::move(associations);
  inst.preferences_ = std::move(preferences);
  inst.pre_assignments_ = std::move(pre_assignments);

  for (std::size_t i = 0; i < inst.professors_.size(); ++i) {
    inst.professor_by_id_.emplace(inst.professors_[i].id, static_cast<std::int32_t>(i));
  }

  inst.section_course_.resize(inst.sections_.size());
  for (std::size_t i = 0; i < inst.sections_.size(); ++i) {
    const Section& sec = inst.sections_[i];
    inst.section_by_ref_.emplace(std::make_pair(sec.course, sec.section_no),
                                 static_cast<std::int32_t>(i));
    auto [it, fresh] =
        inst.course_by_id_.emplace(sec.course, static_cast<std::int32_t>(inst.course_ids_.size()));
    if (fresh) {
      inst.course_ids_.push_back(sec.course);
      inst.course_nonmajor_.push_back(sec.kind == CourseKind::NonMajor ? 1 : 0);
    }
    inst.section_course_[i] = it->second;
  }
  for (std::uint8_t flag : inst.course_nonmajor_) {
    if (flag) ++inst.nonmajor_course_count_;
  }

  inst.group_of_.assign(inst.sections_.size(), -1);
  for (const AssociationGroup& g : inst.associations_) {
    std::vector<std::int32_t> members;
    int sec = inst.section_index(g.lecture.course, g.lecture.section_no);
    if (sec >= 0) members.push_back(sec);
    for (const SectionRef& lab : g.labs) {
      sec = inst.section_index(lab.course, lab.section_no);
      if (sec >= 0) members.push_back(sec);
    }
    int gid = static_cast<int>(inst.group_members_.size());
    for (std::int32_t m : members) {
      if (inst.group_of_[m] < 0) inst.group_of_[m] = gid;
    }
    inst.group_members_.push_back(std::move(members));
  }

  inst.profiles_.resize(inst.professors_.size());
  for (const PreferenceProfile& p : inst.preferences_) {
    int prof = inst.professor_index(p.owner);
    if (prof < 0 || inst.profiles_[prof].lodged) continue;  // validate reports these
    ResolvedProfile& r = inst.profiles_[prof];
    r.w_8am = p.w_8am;
    r.w_half = p.w_half;
    r.w_fav = p.w_fav;
    r.w_gap = p.w_gap;
    r.w_prep = p.w_prep;
    r.half_choice = p.half_choice;
    r.avoid_8am = p.avoid_8am;
    r.lodged = true;
    for (const std::string& course : p.favorite_courses) {
      int c = inst.course_index(course);
      if (c >= 0) r.favorite_courses.push_back(c);
    }
    std::sort(r.favorite_courses.begin(), r.favorite_courses.end());
    r.favorite_courses.erase(
        std::unique(r.favorite_courses.begin(), r.favorite_courses.end()),
        r.favorite_courses.end());
  }

  inst.resolved_pre_.resize(inst.pre_assignments_.size());
  for (std::size_t i = 0; i < inst.pre_assignments_.size(); ++i) {
    const PreAssignment& pa = inst.pre_assignments_[i];
    inst.resolved_pre_[i].professor = inst.professor_index(pa.professor);
    inst.resolved_pre_[i].section =
        inst.section_index(pa.section.course, pa.section.section_no);
  }
  return inst;
}

int Instance::professor_index(std::string_view id) const {
  auto it = professor_by_id_.find(std::string(id));
  return it == professor_by_id_.end() ? -1 : it->second;
}

int Instance::section_index(std::string_view course, int section_no) const {
  auto it = section_by_ref_.find(std::make_pair(std::string(course), section_no));
  return it == section_by_ref_.end() ? -1 : it->second;
}

int Instance::course_index(std::string_view course) const {
  auto it = course_by_id_.find(std::string(course));
  return it == course_by_id_.end() ? -1 : it->second;
}

// ---------------------------------------------------------------------------
// Schedule
// ---------------------------------------------------------------------------

std::vector<std::int32_t> Schedule::unassigned() const {
  std::vector<std::int32_t> out;
  for (std::size_t i = 0; i < owner_.size(); ++i) {
    if (owner_[i] < 0) out.push_back(static_cast<std::int32_t>(i));
  }
  return out;
}

void Schedule::assign(int professor, int section) {
  if (owner_[section] >= 0) {
    throw Error("section already assigned");
  }
  owner_[section] = professor;
  by_professor_[professor].push_back(section);
  ++assigned_;
}

void Schedule::unassign(int section) {
  int prof = owner_[section];
  if (prof < 0) return;
  owner_[section] = -1;
  auto& list = by_professor_[prof];
  list.erase(std::find(list.begin(), list.end(), section));
  --assigned_;
}

void Schedule::set_room_override(int section, std::string room) {
  room_overrides_[section] = std::move(room);
}

void Schedule::clear_room_override(int section) { room_overrides_.erase(section); }

const std::string& effective_room(const Instance& inst, const Schedule& s, int section) {
  auto it = s.room_overrides().find(section);
  if (it != s.room_overrides().end()) return it->second;
  return inst.sections()[section].room;
}

int professor_load(const Schedule& s, const Instance& inst, int professor) {
  int units = 0;
  for (std::int32_t sec : s.sections_of(professor)) {
    units += inst.sections()[sec].units;
  }
  return units;
}

int professor_load(const Schedule& s, const Instance& inst, std::string_view professor_id) {
  int prof = inst.professor_index(professor_id);
  if (prof < 0) {
    throw Error("unknown professor: " + std::string(professor_id));
  }
  return professor_load(s, inst, prof);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

void check_time_block(const TimeBlock& t, const std::string& entity,
                      std::vector<Violation>& out) {
  using Severity = Violation::Severity;
  if (t.days == 0) {
    out.push_back({Severity::Error, entity, "meeting days are empty"});
  }
  if ((t.days & ~kAllWeekdays) != 0) {
    out.push_back({Severity::Error, entity, "meeting days outside Mon-Fri"});
  }
  if (t.start >= t.end) {
    out.push_back({Severity::Error, entity,
                   "meeting start " + format_time(t.start) + " is not before end " +
                       format_time(t.end)});
    return;
  }
  if (t.start < kDayStartMin || t.end > kDayEndMin) {
    out.push_back({Severity::Warning, entity,
                   "meeting " + format_time(t.start) + "-" + format_time(t.end) +
                       " falls outside the 08:00-18:00 teaching day"});
  }
}

}  // namespace

std::vector<Violation> validate_instance(const Instance& inst) {
  using Severity = Violation::Severity;
  std::vector<Violation> out;

  // Professors.
  {
    std::unordered_map<std::string, int> seen;
    for (const Professor& p : inst.professors()) {
      std::string entity = "professor " + p.id;
      if (p.mandated_units < 0 || p.mandated_units > 15) {
        out.push_back({Severity::Error, entity,
                       "mandated units " + std::to_string(p.mandated_units) +
                           " outside 0..15"});
      }
      if (++seen[p.id] == 2) {
        out.push_back({Severity::Error, entity, "duplicate professor id"});
      }
    }
  }

  // Sections.
  {
    std::map<std::pair<std::string, int>, int> seen;
    for (const Section& s : inst.sections()) {
      std::string entity = "section " + section_label(s);
      if (s.units <= 0) {
        out.push_back({Severity::Error, entity,
                       "units " + std::to_string(s.units) + " must be positive"});
      }
      check_time_block(s.meeting, entity, out);
      if (++seen[{s.course, s.section_no}] == 2) {
        out.push_back({Severity::Error, entity, "duplicate (course, section) pair"});
      }
    }
  }

  // Association groups: members exist, share a course, belong to one group.
  {
    std::unordered_map<int, int> membership_count;
    for (const AssociationGroup& g : inst.associations()) {
      std::string entity = "association " + ref_label(g.lecture);
      std::vector<SectionRef> refs;
      refs.push_back(g.lecture);
      refs.insert(refs.end(), g.labs.begin(), g.labs.end());
      for (const SectionRef& r : refs) {
        int sec = inst.section_index(r.course, r.section_no);
        if (sec < 0) {
          out.push_back({Severity::Error, entity,
                         "references unknown section " + ref_label(r)});
          continue;
        }
        if (r.course != g.lecture.course) {
          out.push_back({Severity::Error, entity,
                         "member " + ref_label(r) + " is from a different course"});
        }
        if (++membership_count[sec] == 2) {
          out.push_back({Severity::Error, entity,
                         "section " + ref_label(r) + " appears in more than one group"});
        }
      }
    }
  }

  // Preference profiles.
  {
    std::unordered_map<std::string, int> seen;
    for (const PreferenceProfile& p : inst.preferences()) {
      std::string entity = "preferences of " + p.owner;
      if (inst.professor_index(p.owner) < 0) {
        out.push_back({Severity::Error, entity, "unknown professor " + p.owner});
      }
      if (++seen[p.owner] == 2) {
        out.push_back({Severity::Error, entity, "duplicate preference profile"});
      }
      const double w[5] = {p.w_8am, p.w_half, p.w_fav, p.w_gap, p.w_prep};
      bool in_range = true;
      for (double v : w) {
        if (v < 0.0 || v > 1.0) in_range = false;
      }
      if (!in_range) {
        out.push_back({Severity::Error, entity, "a preference weight is outside [0,1]"});
      }
      double sum = w[0] + w[1] + w[2] + w[3] + w[4];
      bool all_zero = sum == 0.0;
      if (!all_zero && std::abs(sum - 1.0) > kWeightSumTolerance) {
        std::ostringstream msg;
        msg << "preference weights sum to " << sum << ", expected 1.0 (or all zero)";
        out.push_back({Severity::Error, entity, msg.str()});
      }
      for (const std::string& course : p.favorite_courses) {
        int c = inst.course_index(course);
        if (c < 0) {
          out.push_back({Severity::Error, entity, "unknown favorite course " + course});
        } else if (!inst.course_nonmajor(c)) {
          out.push_back({Severity::Error, entity,
                         "favorite course " + course + " is not a non-major course"});
        }
      }
    }
  }

  // Pre-assignments: references resolve and the fixed part of the schedule
  // already satisfies the hard constraints.
  {
    const auto& resolved = inst.resolved_pre_assignments();
    std::vector<std::int32_t> owner(inst.section_count(), -1);
    std::vector<int> load(std::max(inst.professor_count(), 1), 0);
    std::vector<std::vector<int>> held(std::max(inst.professor_count(), 1));
    for (std::size_t i = 0; i < resolved.size(); ++i) {
      const PreAssignment& pa = inst.pre_assignments()[i];
      std::string entity = "pre-assignment " + pa.professor + " <- " + ref_label(pa.section);
      int prof = resolved[i].professor;
      int sec = resolved[i].section;
      if (prof < 0) {
        out.push_back({Severity::Error, entity, "unknown professor " + pa.professor});
      }
      if (sec < 0) {
        out.push_back({Severity::Error, entity, "unknown section " + ref_label(pa.section)});
      }
      if (prof < 0 || sec < 0) continue;
      if (owner[sec] >= 0) {
        out.push_back({Severity::Error, entity, "section pre-assigned twice"});
        continue;
      }
      owner[sec] = prof;
      load[prof] += inst.sections()[sec].units;
      if (load[prof] > inst.professors()[prof].mandated_units) {
        out.push_back({Severity::Error, entity,
                       "pre-assigned load " + std::to_string(load[prof]) +
                           " exceeds mandated units " +
                           std::to_string(inst.professors()[prof].mandated_units) + " of " +
                           pa.professor});
      }
      for (int other : held[prof]) {
        if (overlaps(inst.sections()[sec].meeting, inst.sections()[other].meeting)) {
          out.push_back({Severity::Error, entity,
                         "conflicts in time with pre-assigned " +
                             section_label(inst.sections()[other])});
        }
      }
      held[prof].push_back(sec);
    }
  }

  return out;
}

bool has_errors(const std::vector<Violation>& violations) {
  for (const Violation& v : violations) {
    if (v.severity == Violation::Severity::Error) return true;
  }
  return false;
}

std::string format_violations(const std::vector<Violation>& violations) {
  std::string out;
  for (const Violation& v : violations) {
    out += v.severity == Violation::Severity::Error ? "error: " : "warning: ";
    out += v.entity;
    out += ": ";
    out += v.message;
    out += '\n';
  }
  return out;
}

}  // namespace gasched

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

#ifndef GASCHED_DOMAIN_HPP
#define GASCHED_DOMAIN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gasched {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file; message carries file, line and field position.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Instance failed validation; message lists every violation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A swap suggestion no longer matches the schedule it is applied to.
class StaleSuggestionError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Time arithmetic
// ---------------------------------------------------------------------------

// Weekday bits, Monday..Friday. Thursday is R throughout (day strings,
// facts files), never TH.
inline constexpr std::uint8_t kMon = 1u << 0;
inline constexpr std::uint8_t kTue = 1u << 1;
inline constexpr std::uint8_t kWed = 1u << 2;
inline constexpr std::uint8_t kThu = 1u << 3;
inline constexpr std::uint8_t kFri = 1u << 4;
inline constexpr std::uint8_t kAllWeekdays = 0x1f;
inline constexpr int kWeekdayCount = 5;

inline constexpr int kDayStartMin = 8 * 60;   // teaching day begins 8am
inline constexpr int kDayEndMin = 18 * 60;    // and ends 6pm
inline constexpr int kMiddayMin = 13 * 60;    // first/second half boundary, 1pm

/// Weekly meeting pattern: a set of weekdays plus one [start, end) minute
/// interval shared by all of them. End-exclusive, so a class ending 10:00
/// coexists with one starting 10:00.
struct TimeBlock {
  std::uint8_t days = 0;     // kMon..kFri bits
  std::int32_t start = 0;    // minutes since midnight
  std::int32_t end = 0;      // minutes since midnight, exclusive

  bool operator==(const TimeBlock&) const = default;
};

/// True iff the blocks share a weekday and their minute intervals intersect.
bool overlaps(const TimeBlock& a, const TimeBlock& b);

int day_count(std::uint8_t days);
std::string format_days(std::uint8_t days);                  // "MWF"
std::optional<std::uint8_t> parse_days(std::string_view s);  // accepts "mwf", "MWF"
std::string format_time(int minutes);                        // "13:10"
std::optional<int> parse_time(std::string_view s);           // "13:10" -> 790

// ---------------------------------------------------------------------------
// Instance data
// ---------------------------------------------------------------------------

struct Professor {
  std::string id;
  int mandated_units = 0;   // contractual teaching capacity, 0..15
  bool ga_eligible = true;  // false: fully prescheduled by hand, GA leaves them alone
};

enum class SectionMode { Lecture, Laboratory };

enum class CourseKind { NonMajor, Major, Speciality };

struct Section {
  std::string course;       // e.g. "PHYS-122"
  int section_no = 0;
  int units = 0;            // teaching workload units
  SectionMode mode = SectionMode::Lecture;
  TimeBlock meeting;
  std::string room;         // e.g. "180-0101"
  CourseKind kind = CourseKind::NonMajor;
};

/// (course, section_no) reference into the section list.
struct SectionRef {
  std::string course;
  int section_no = 0;

  bool operator==(const SectionRef&) const = default;
};

enum class HalfChoice { None, FirstHalf, SecondHalf };

/// One professor's survey answers: five importance weights that either sum
/// to 1.0 or are all zero (no preferences lodged).
struct PreferenceProfile {
  std::string owner;
  double w_8am = 0.0;
  double w_half = 0.0;
  double w_fav = 0.0;
  double w_gap = 0.0;
  double w_prep = 0.0;
  HalfChoice half_choice = HalfChoice::None;
  std::vector<std::string> favorite_courses;
  bool avoid_8am = false;
};

/// Lecture section plus its companion laboratory sections, preferably all
/// taught by one professor.
struct AssociationGroup {
  SectionRef lecture;
  std::vector<SectionRef> labs;
};

struct PreAssignment {
  std::string professor;
  SectionRef section;
};

/// Preference weights resolved to course indices; all-zero when the
/// professor lodged nothing.
struct ResolvedProfile {
  double w_8am = 0.0;
  double w_half = 0.0;
  double w_fav = 0.0;
  double w_gap = 0.0;
  double w_prep = 0.0;
  HalfChoice half_choice = HalfChoice::None;
  std::vector<std::int32_t> favorite_courses;  // course indices, sorted
  bool avoid_8am = false;
  bool lodged = false;
};

struct ResolvedPreAssignment {
  std::int32_t professor = -1;  // -1: unknown id (reported by validate_instance)
  std::int32_t section = -1;
};

/// Full problem input. Immutable once built; construction never throws on
/// bad cross-references, it records them for validate_instance to report.
class Instance {
 public:
  Instance() = default;

  static Instance build(std::vector<Professor> professors, std::vector<Section> sections,
                        std::vector<AssociationGroup> associations,
                        std::vector<PreferenceProfile> preferences,
                        std::vector<PreAssignment> pre_assignments);

  const std::vector<Professor>& professors() const { return professors_; }
  const std::vector<Section>& sections() const { return sections_; }
  const std::vector<AssociationGroup>& associations() const { return associations_; }
  const std::vector<PreferenceProfile>& preferences() const { return preferences_; }
  const std::vector<PreAssignment>& pre_assignments() const { return pre_assignments_; }

  int professor_count() const { return static_cast<int>(professors_.size()); }
  int section_count() const { return static_cast<int>(sections_.size()); }
  int course_count() const { return static_cast<int>(course_ids_.size()); }
  int group_count() const { return static_cast<int>(group_members_.size()); }

  /// -1 when the id / pair is unknown.
  int professor_index(std::string_view id) const;
  int section_index(std::string_view course, int section_no) const;
  int course_index(std::string_view course) const;

  const std::string& course_id(int course) const { return course_ids_[course]; }
  int section_course(int section) const { return section_course_[section]; }
  bool course_nonmajor(int course) const { return course_nonmajor_[course] != 0; }
  int nonmajor_course_count() const { return nonmajor_course_count_; }

  /// Association group containing the section, or -1.
  int group_of(int section) const { return group_of_[section]; }
  const std::vector<std::int32_t>& group_members(int group) const {
    return group_members_[group];
  }

  const ResolvedProfile& profile(int professor) const { return profiles_[professor]; }

  /// Parallel to pre_assignments(); -1 entries mark dangling references.
  const std::vector<ResolvedPreAssignment>& resolved_pre_assignments() const {
    return resolved_pre_;
  }

 private:
  std::vector<Professor> professors_;
  std::vector<Section> sections_;
  std::vector<AssociationGroup> associations_;
  std::vector<PreferenceProfile> preferences_;
  std::vector<PreAssignment> pre_assignments_;

  std::unordered_map<std::string, std::int32_t> professor_by_id_;
  std::map<std::pair<std::string, int>, std::int32_t> section_by_ref_;
  std::unordered_map<std::string, std::int32_t> course_by_id_;
  std::vector<std::string> course_ids_;
  std::vector<std::int32_t> section_course_;
  std::vector<std::uint8_t> course_nonmajor_;
  int nonmajor_course_count_ = 0;
  std::vector<std::int32_t> group_of_;
  std::vector<std::vector<std::int32_t>> group_members_;
  std::vector<ResolvedProfile> profiles_;
  std::vector<ResolvedPreAssignment> resolved_pre_;
};

// ---------------------------------------------------------------------------
// Schedule
// ---------------------------------------------------------------------------

/// Map professor -> assigned sections, with the leftovers implicit
/// (owner -1). The type itself allows invalid states so validators and
/// fixtures can represent them; build_schedule and apply_swap are the
/// constructors that guarantee the hard constraints.
class Schedule {
 public:
  Schedule() = default;
  Schedule(int professor_count, int section_count)
      : owner_(section_count, -1), by_professor_(professor_count) {}

  int professor_count() const { return static_cast<int>(by_professor_.size()); }
  int section_count() const { return static_cast<int>(owner_.size()); }

  int owner_of(int section) const { return owner_[section]; }
  const std::vector<std::int32_t>& sections_of(int professor) const {
    return by_professor_[professor];
  }
  std::vector<std::int32_t> unassigned() const;
  int assigned_count() const { return assigned_; }

  void assign(int professor, int section);
  void unassign(int section);

  /// Rooms moved by post-optimization swaps; section -> room id.
  const std::map<std::int32_t, std::string>& room_overrides() const {
    return room_overrides_;
  }
  void set_room_override(int section, std::string room);
  void clear_room_override(int section);

  bool same_assignments(const Schedule& other) const {
    return owner_ == other.owner_;
  }

 private:
  std::vector<std::int32_t> owner_;                     // section -> professor or -1
  std::vector<std::vector<std::int32_t>> by_professor_;  // insertion order
  std::map<std::int32_t, std::string> room_overrides_;
  int assigned_ = 0;
};

/// Room the section meets in, honoring any swap override.
const std::string& effective_room(const Instance& inst, const Schedule& s, int section);

/// Units assigned to the professor, pre-assignments included.
int professor_load(const Schedule& s, const Instance& inst, int professor);
int professor_load(const Schedule& s, const Instance& inst, std::string_view professor_id);

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct Violation {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string entity;   // "professor prof3", "section PHYS-122-02", ...
  std::string message;
};

/// Every invariant breach in the instance, one record per breach. The
/// 8am-6pm meeting bounds come back as warnings so unusual instances still
/// load; everything else is an error.
std::vector<Violation> validate_instance(const Instance& inst);

bool has_errors(const std::vector<Violation>& violations);
std::string format_violations(const std::vector<Violation>& violations);

}  // namespace gasched

#endif  // GASCHED_DOMAIN_HPP

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

#include "gasched/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gasched/fitness.hpp"
#include "tokens.hpp"

namespace gasched {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

// ---------------------------------------------------------------------------
// CSV reading
// ---------------------------------------------------------------------------

struct CsvRow {
  int line = 0;                     // 1-based
  std::vector<std::string> fields;
  std::vector<int> columns;         // 1-based start column of each field
};

struct CsvTable {
  std::string path;
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
};

[[noreturn]] void fail_at(const std::string& path, int line, int column,
                          const std::string& message) {
  throw ParseError(path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                   message);
}

[[noreturn]] void fail_field(const CsvTable& t, const CsvRow& row, int field,
                             const std::string& message) {
  fail_at(t.path, row.line, row.columns[field], message);
}

CsvRow split_line(const std::string& line, int line_no) {
  CsvRow row;
  row.line = line_no;
  std::string field;
  int col = 1;
  row.columns.push_back(col);
  for (char c : line) {
    ++col;
    if (c == ',') {
      row.fields.push_back(std::move(field));
      field.clear();
      row.columns.push_back(col);
    } else {
      field.push_back(c);
    }
  }
  row.fields.push_back(std::move(field));
  return row;
}

CsvTable read_csv(const std::string& path, const std::vector<std::string>& expected_header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path + ": cannot open file");
  }
  CsvTable t;
  t.path = path;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      // A single empty tail after the final newline is fine; blanks in the
      // middle are not.
      if (in.peek() == std::char_traits<char>::eof()) break;
      fail_at(path, line_no, 1, "blank line");
    }
    CsvRow row = split_line(line, line_no);
    if (line_no == 1) {
      if (row.fields != expected_header) {
        std::string want;
        for (const std::string& h : expected_header) {
          if (!want.empty()) want += ',';
          want += h;
        }
        fail_at(path, 1, 1, "header mismatch; expected \"" + want + "\", got \"" + line + "\"");
      }
      t.header = row.fields;
      continue;
    }
    if (row.fields.size() != expected_header.size()) {
      fail_at(path, line_no, 1,
              "expected " + std::to_string(expected_header.size()) + " fields, got " +
                  std::to_string(row.fields.size()));
    }
    t.rows.push_back(std::move(row));
  }
  if (line_no == 0) {
    fail_at(path, 1, 1, "empty file, header row required");
  }
  return t;
}

int parse_int_field(const CsvTable& t, const CsvRow& row, int field) {
  const std::string& s = row.fields[field];
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail_field(t, row, field, "expected an integer, got \"" + s + "\"");
  }
  return value;
}

double parse_double_field(const CsvTable& t, const CsvRow& row, int field) {
  const std::string& s = row.fields[field];
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail_field(t, row, field, "expected a number, got \"" + s + "\"");
  }
  return value;
}

bool parse_bool_field(const CsvTable& t, const CsvRow& row, int field) {
  const std::string& s = row.fields[field];
  if (s == "true") return true;
  if (s == "false") return false;
  fail_field(t, row, field, "expected true or false, got \"" + s + "\"");
}

std::uint8_t parse_days_field(const CsvTable& t, const CsvRow& row, int field) {
  auto days = parse_days(row.fields[field]);
  if (!days) {
    fail_field(t, row, field,
               "expected meeting days like MWF or TR, got \"" + row.fields[field] + "\"");
  }
  return *days;
}

int parse_time_field(const CsvTable& t, const CsvRow& row, int field) {
  auto minutes = parse_time(row.fields[field]);
  if (!minutes) {
    fail_field(t, row, field, "expected a HH:MM time, got \"" + row.fields[field] + "\"");
  }
  return *minutes;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = s.find(';', start);
    out.push_back(s.substr(start, semi == std::string::npos ? semi : semi - start));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out += ';';
    out += item;
  }
  return out;
}

class FileWriter {
 public:
  explicit FileWriter(const std::string& path) : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw Error("cannot write " + path);
  }
  template <typename T>
  FileWriter& operator<<(const T& v) {
    out_ << v;
    return *this;
  }
  ~FileWriter() noexcept(false) {
    out_.flush();
    if (!out_ && std::uncaught_exceptions() == 0) {
      throw Error("write failed: " + path_);
    }
  }

 private:
  std::string path_;
  std::ofstream out_;
};

const char* mode_name(SectionMode m) {
  return m == SectionMode::Lecture ? "Lecture" : "Laboratory";
}

const char* kind_name(CourseKind k) {
  switch (k) {
    case CourseKind::NonMajor: return "nonmajor";
    case CourseKind::Major: return "major";
    case CourseKind::Speciality: return "speciality";
  }
  return "nonmajor";
}

const char* half_name(HalfChoice h) {
  switch (h) {
    case HalfChoice::None: return "none";
    case HalfChoice::FirstHalf: return "first";
    case HalfChoice::SecondHalf: return "second";
  }
  return "none";
}

}  // namespace

InstanceFiles InstanceFiles::in_dir(const std::string& dir) {
  auto join = [&dir](const char* name) { return dir + "/" + name; };
  return {join("professors.csv"), join("sections.csv"), join("associations.csv"),
          join("preferences.csv"), join("preassignments.csv")};
}

Instance load_instance(const InstanceFiles& files, std::vector<Violation>* warnings) {
  const CsvTable profs = read_csv(files.professors, {"id", "mandated_units", "ga_eligible"});
  std::vector<Professor> professors;
  professors.reserve(profs.rows.size());
  for (const CsvRow& row : profs.rows) {
    Professor p;
    p.id = row.fields[0];
    p.mandated_units = parse_int_field(profs, row, 1);
    p.ga_eligible = parse_bool_field(profs, row, 2);
    professors.push_back(std::move(p));
  }

  const CsvTable secs = read_csv(
      files.sections,
      {"course", "section", "units", "mode", "days", "start", "end", "room", "kind"});
  std::vector<Section> sections;
  sections.reserve(secs.rows.size());
  for (const CsvRow& row : secs.rows) {
    Section s;
    s.course = row.fields[0];
    s.section_no = parse_int_field(secs, row, 1);
    s.units = parse_int_field(secs, row, 2);
    if (row.fields[3] == "Lecture") {
      s.mode = SectionMode::Lecture;
    } else if (row.fields[3] == "Laboratory") {
      s.mode = SectionMode::Laboratory;
    } else {
      fail_field(secs, row, 3, "expected Lecture or Laboratory, got \"" + row.fields[3] + "\"");
    }
    s.meeting.days = parse_days_field(secs, row, 4);
    s.meeting.start = parse_time_field(secs, row, 5);
    s.meeting.end = parse_time_field(secs, row, 6);
    s.room = row.fields[7];
    if (row.fields[8] == "nonmajor") {
      s.kind = CourseKind::NonMajor;
    } else if (row.fields[8] == "major") {
      s.kind = CourseKind::Major;
    } else if (row.fields[8] == "speciality") {
      s.kind = CourseKind::Speciality;
    } else {
      fail_field(secs, row, 8,
                 "expected nonmajor, major or speciality, got \"" + row.fields[8] + "\"");
    }
    sections.push_back(std::move(s));
  }

  const CsvTable assoc =
      read_csv(files.associations, {"course", "lecture_section", "lab_sections"});
  std::vector<AssociationGroup> associations;
  associations.reserve(assoc.rows.size());
  for (const CsvRow& row : assoc.rows) {
    AssociationGroup g;
    g.lecture.course = row.fields[0];
    g.lecture.section_no = parse_int_field(assoc, row, 1);
    for (const std::string& lab : split_list(row.fields[2])) {
      int no = 0;
      auto [ptr, ec] = std::from_chars(lab.data(), lab.data() + lab.size(), no);
      if (ec != std::errc() || ptr != lab.data() + lab.size()) {
        fail_field(assoc, row, 2, "expected ;-separated section numbers, got \"" +
                                      row.fields[2] + "\"");
      }
      g.labs.push_back({row.fields[0], no});
    }
    associations.push_back(std::move(g));
  }

  const CsvTable prefs = read_csv(files.preferences,
                                  {"professor", "w_8am", "w_half", "w_fav", "w_gap", "w_prep",
                                   "half_choice", "favorites", "avoid_8am"});
  std::vector<PreferenceProfile> preferences;
  preferences.reserve(prefs.rows.size());
  for (const CsvRow& row : prefs.rows) {
    PreferenceProfile p;
    p.owner = row.fields[0];
    p.w_8am = parse_double_field(prefs, row, 1);
    p.w_half = parse_double_field(prefs, row, 2);
    p.w_fav = parse_double_field(prefs, row, 3);
    p.w_gap = parse_double_field(prefs, row, 4);
    p.w_prep = parse_double_field(prefs, row, 5);
    if (row.fields[6] == "none") {
      p.half_choice = HalfChoice::None;
    } else if (row.fields[6] == "first") {
      p.half_choice = HalfChoice::FirstHalf;
    } else if (row.fields[6] == "second") {
      p.half_choice = HalfChoice::SecondHalf;
    } else {
      fail_field(prefs, row, 6, "expected first, second or none, got \"" + row.fields[6] + "\"");
    }
    p.favorite_courses = split_list(row.fields[7]);
    p.avoid_8am = parse_bool_field(prefs, row, 8);
    preferences.push_back(std::move(p));
  }

  const CsvTable pre = read_csv(files.preassignments, {"professor", "course", "section"});
  std::vector<PreAssignment> pre_assignments;
  pre_assignments.reserve(pre.rows.size());
  for (const CsvRow& row : pre.rows) {
    PreAssignment pa;
    pa.professor = row.fields[0];
    pa.section.course = row.fields[1];
    pa.section.section_no = parse_int_field(pre, row, 2);
    pre_assignments.push_back(std::move(pa));
  }

  Instance inst = Instance::build(std::move(professors), std::move(sections),
                                  std::move(associations), std::move(preferences),
                                  std::move(pre_assignments));
  std::vector<Violation> violations = validate_instance(inst);
  if (has_errors(violations)) {
    throw ValidationError("instance validation failed:\n" + format_violations(violations));
  }
  if (warnings) {
    for (Violation& v : violations) {
      warnings->push_back(std::move(v));  // only warnings survive to here
    }
  }
  return inst;
}

void write_instance_files(const Instance& inst, const std::string& dir) {
  const InstanceFiles files = InstanceFiles::in_dir(dir);
  {
    FileWriter out(files.professors);
    out << "id,mandated_units,ga_eligible\n";
    for (const Professor& p : inst.professors()) {
      out << p.id << ',' << p.mandated_units << ',' << (p.ga_eligible ? "true" : "false")
          << '\n';
    }
  }
  {
    FileWriter out(files.sections);
    out << "course,section,units,mode,days,start,end,room,kind\n";
    for (const Section& s : inst.sections()) {
      out << s.course << ',' << s.section_no << ',' << s.units << ',' << mode_name(s.mode)
          << ',' << format_days(s.meeting.days) << ',' << format_time(s.meeting.start) << ','
          << format_time(s.meeting.end) << ',' << s.room << ',' << kind_name(s.kind) << '\n';
    }
  }
  {
    FileWriter out(files.associations);
    out << "course,lecture_section,lab_sections\n";
    for (const AssociationGroup& g : inst.associations()) {
      std::vector<std::string> labs;
      labs.reserve(g.labs.size());
      for (const SectionRef& lab : g.labs) labs.push_back(std::to_string(lab.section_no));
      out << g.lecture.course << ',' << g.lecture.section_no << ',' << join_list(labs) << '\n';
    }
  }
  {
    FileWriter out(files.preferences);
    out << "professor,w_8am,w_half,w_fav,w_gap,w_prep,half_choice,favorites,avoid_8am\n";
    for (const PreferenceProfile& p : inst.preferences()) {
      out << p.owner << ',' << format_double(p.w_8am) << ',' << format_double(p.w_half) << ','
          << format_double(p.w_fav) << ',' << format_double(p.w_gap) << ','
          << format_double(p.w_prep) << ',' << half_name(p.half_choice) << ','
          << join_list(p.favorite_courses) << ',' << (p.avoid_8am ? "true" : "false") << '\n';
    }
  }
  {
    FileWriter out(files.preassignments);
    out << "professor,course,section\n";
    for (const PreAssignment& pa : inst.pre_assignments()) {
      out << pa.professor << ',' << pa.section.course << ',' << pa.section.section_no << '\n';
    }
  }
}

namespace {

/// Assigned sections ordered professor, course, section; used by the
/// schedule and facts writers.
std::vector<std::int32_t> assigned_in_report_order(const Schedule& s, const Instance& inst) {
  std::vector<std::int32_t> out;
  for (int p = 0; p < inst.professor_count(); ++p) {
    std::vector<std::int32_t> held = s.sections_of(p);
    std::sort(held.begin(), held.end(), [&inst](std::int32_t a, std::int32_t b) {
      const Section& sa = inst.sections()[a];
      const Section& sb = inst.sections()[b];
      if (sa.course != sb.course) return sa.course < sb.course;
      return sa.section_no < sb.section_no;
    });
    out.insert(out.end(), held.begin(), held.end());
  }
  return out;
}

}  // namespace

void write_schedule(const Schedule& s, const Instance& inst, const std::string& path) {
  FileWriter out(path);
  out << "professor,course,section,units,mode,days,start,end,room\n";
  auto emit = [&](int sec_idx, const std::string& prof) {
    const Section& sec = inst.sections()[sec_idx];
    out << prof << ',' << sec.course << ',' << sec.section_no << ',' << sec.units << ','
        << mode_name(sec.mode) << ',' << format_days(sec.meeting.days) << ','
        << format_time(sec.meeting.start) << ',' << format_time(sec.meeting.end) << ','
        << effective_room(inst, s, sec_idx) << '\n';
  };
  for (std::int32_t sec : assigned_in_report_order(s, inst)) {
    emit(sec, inst.professors()[s.owner_of(sec)].id);
  }
  std::vector<std::int32_t> rest = s.unassigned();
  std::sort(rest.begin(), rest.end(), [&inst](std::int32_t a, std::int32_t b) {
    const Section& sa = inst.sections()[a];
    const Section& sb = inst.sections()[b];
    if (sa.course != sb.course) return sa.course < sb.course;
    return sa.section_no < sb.section_no;
  });
  for (std::int32_t sec : rest) emit(sec, "");
}

Schedule load_schedule(const Instance& inst, const std::string& path) {
  const CsvTable table = read_csv(
      path, {"professor", "course", "section", "units", "mode", "days", "start", "end", "room"});
  Schedule s(inst.professor_count(), inst.section_count());
  std::vector<bool> seen(inst.section_count(), false);
  for (const CsvRow& row : table.rows) {
    const std::string& course = row.fields[1];
    int section_no = parse_int_field(table, row, 2);
    int sec = inst.section_index(course, section_no);
    if (sec < 0) {
      fail_field(table, row, 1,
                 "schedule references section " + course + "-" + std::to_string(section_no) +
                     " which the instance does not define");
    }
    if (seen[sec]) {
      fail_field(table, row, 1, "section " + course + "-" + std::to_string(section_no) +
                                    " appears twice in the schedule");
    }
    seen[sec] = true;
    const Section& expect = inst.sections()[sec];
    if (parse_int_field(table, row, 3) != expect.units ||
        row.fields[4] != mode_name(expect.mode) ||
        parse_days_field(table, row, 5) != expect.meeting.days ||
        parse_time_field(table, row, 6) != expect.meeting.start ||
        parse_time_field(table, row, 7) != expect.meeting.end) {
      fail_field(table, row, 3, "section data disagrees with the instance definition of " +
                                    course + "-" + std::to_string(section_no));
    }
    if (!row.fields[0].empty()) {
      int prof = inst.professor_index(row.fields[0]);
      if (prof < 0) {
        fail_field(table, row, 0, "schedule assigns " + course + "-" +
                                      std::to_string(section_no) + " to unknown professor " +
                                      row.fields[0]);
      }
      s.assign(prof, sec);
    }
    if (row.fields[8] != expect.room) {
      s.set_room_override(sec, row.fields[8]);
    }
  }
  for (int sec = 0; sec < inst.section_count(); ++sec) {
    if (!seen[sec]) {
      const Section& missing = inst.sections()[sec];
      throw ParseError(path + ": schedule is missing a row for section " + missing.course +
                       "-" + std::to_string(missing.section_no));
    }
  }
  return s;
}

void write_prolog_facts(const Schedule& s, const Instance& inst, const std::string& path) {
  FileWriter out(path);
  char section_no[16];
  char times[40];
  for (std::int32_t sec_idx : assigned_in_report_order(s, inst)) {
    const Section& sec = inst.sections()[sec_idx];
    std::string prof = detail::lower_atom(inst.professors()[s.owner_of(sec_idx)].id, "professor");
    std::string course = detail::lower_atom(sec.course, "course");
    std::string days = format_days(sec.meeting.days);
    for (char& c : days) c = static_cast<char>(c - 'A' + 'a');
    const TimeBlock& t = sec.meeting;
    std::snprintf(section_no, sizeof(section_no), "%02d", sec.section_no);
    std::snprintf(times, sizeof(times), "[%02d,%02d,%02d,%02d]", t.start / 60, t.start % 60,
                  t.end / 60, t.end % 60);
    out << "class(" << prof << ',' << course << '-' << section_no << ',' << days << ','
        << times << ',' << detail::room_atom(effective_room(inst, s, sec_idx)) << ").\n";
  }
}

void write_run_report(const RunResult& result, const Instance& inst,
                      const std::string& path_prefix) {
  {
    FileWriter out(path_prefix + "_generations.csv");
    out << "generation,min_fitness,mean_fitness,max_fitness,assigned_count,new_global_best\n";
    for (const GenerationStats& g : result.history) {
      out << g.generation << ',' << format_double(g.min_fitness) << ','
          << format_double(g.mean_fitness) << ',' << format_double(g.max_fitness) << ','
          << g.assigned_count << ',' << (g.new_global_best ? "true" : "false") << '\n';
    }
  }
  {
    FileWriter out(path_prefix + "_professors.csv");
    out << "phase,professor,d_units,d_assoc,d_8am,d_half,d_fav,d_gap,d_prep,f_p\n";
    auto emit = [&](const char* phase, const FitnessBreakdown& b) {
      for (int p = 0; p < inst.professor_count(); ++p) {
        const ComponentBreakdown& c = b.per_professor[p];
        out << phase << ',' << inst.professors()[p].id << ',' << format_double(c.d_units)
            << ',' << format_double(c.d_assoc) << ',' << format_double(c.d_8am) << ','
            << format_double(c.d_half) << ',' << format_double(c.d_fav) << ','
            << format_double(c.d_gap) << ',' << format_double(c.d_prep) << ','
            << format_double(c.f_p) << '\n';
      }
    };
    emit("initial", result.initial_breakdown);
    emit("final", result.best_breakdown);
  }
}

void write_explanations(const Schedule& s, const Instance& inst, const std::string& path) {
  FileWriter out(path);
  for (int p = 0; p < inst.professor_count(); ++p) {
    out << inst.professors()[p].id << ": fitness "
        << format_double(local_fitness(s, inst, p)) << '\n';
    for (const std::string& line : explain(s, inst, p)) {
      out << "  " << line << '\n';
    }
  }
}

}  // namespace gasched

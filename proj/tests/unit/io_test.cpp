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

#include <charconv>

#include "gasched/chromosome.hpp"
#include "gasched/fitness.hpp"
#include "gasched/generate.hpp"
#include "gasched/io.hpp"
#include "gasched/postopt.hpp"
#include "test_support.hpp"

using namespace gasched;
using namespace testsup;

namespace {

/// The Table I / Table IV style fixture files.
void write_paper_tables(const TempDir& dir) {
  spit(dir.file("professors.csv"),
       "id,mandated_units,ga_eligible\n"
       "prof1,12,true\n"
       "prof2,7,true\n"
       "prof3,15,true\n"
       "prof4,2,true\n");
  spit(dir.file("sections.csv"),
       "course,section,units,mode,days,start,end,room,kind\n"
       "PHYS-121,1,4,Lecture,MTWR,09:00,10:00,180-0262,nonmajor\n"
       "PHYS-121,2,4,Lecture,MTWR,10:00,11:00,180-0262,nonmajor\n"
       "PHYS-122,1,3,Lecture,MWF,08:00,09:00,180-0272,nonmajor\n"
       "PHYS-122,2,2,Laboratory,W,12:00,15:00,180-0634,nonmajor\n"
       "PHYS-122,3,2,Laboratory,R,15:00,18:00,180-0634,nonmajor\n"
       "PHYS-142,1,3,Lecture,MWF,08:00,09:00,053-0206,nonmajor\n"
       "ASTR-102,1,2,Lecture,MTWR,17:10,18:00,180-0101,speciality\n");
  spit(dir.file("associations.csv"),
       "course,lecture_section,lab_sections\n"
       "PHYS-122,1,2;3\n");
  spit(dir.file("preferences.csv"),
       "professor,w_8am,w_half,w_fav,w_gap,w_prep,half_choice,favorites,avoid_8am\n"
       "prof1,0.4,0.2,0.1,0.2,0.1,first,PHYS-121;PHYS-142,false\n"
       "prof2,0.3,0,0.3,0.1,0.3,second,PHYS-142,true\n");
  spit(dir.file("preassignments.csv"),
       "professor,course,section\n"
       "prof4,ASTR-102,1\n");
}

}  // namespace

TEST_CASE("load_instance: the paper-table fixture loads with its values intact") {
  TempDir dir("load");
  write_paper_tables(dir);
  std::vector<Violation> warnings;
  Instance inst = load_instance(InstanceFiles::in_dir(dir.str()), &warnings);
  CHECK(warnings.empty());

  REQUIRE(inst.professor_count() == 4);
  CHECK(inst.professors()[0].mandated_units == 12);
  CHECK(inst.professors()[1].mandated_units == 7);
  CHECK(inst.professors()[2].mandated_units == 15);
  CHECK(inst.professors()[3].mandated_units == 2);

  REQUIRE(inst.section_count() == 7);
  int lab = inst.section_index("PHYS-122", 2);
  REQUIRE(lab >= 0);
  CHECK(inst.sections()[lab].mode == SectionMode::Laboratory);
  CHECK(inst.sections()[lab].meeting.days == *parse_days("W"));
  CHECK(inst.sections()[lab].meeting.start == 720);

  const ResolvedProfile& p1 = inst.profile(0);
  CHECK(p1.lodged);
  CHECK(p1.w_8am == 0.4);
  CHECK(p1.w_half == 0.2);
  CHECK(p1.half_choice == HalfChoice::FirstHalf);
  CHECK(p1.w_8am + p1.w_half + p1.w_fav + p1.w_gap + p1.w_prep == doctest::Approx(1.0));
  REQUIRE(p1.favorite_courses.size() == 2);

  REQUIRE(inst.resolved_pre_assignments().size() == 1);
  CHECK(inst.resolved_pre_assignments()[0].professor == 3);

  CHECK(inst.group_of(inst.section_index("PHYS-122", 1)) == 0);
  CHECK(inst.nonmajor_course_count() == 3);  // 121, 122, 142
}

TEST_CASE("load_instance: a 0.9 weight row is rejected and names the professor") {
  TempDir dir("badweights");
  write_paper_tables(dir);
  spit(dir.file("preferences.csv"),
       "professor,w_8am,w_half,w_fav,w_gap,w_prep,half_choice,favorites,avoid_8am\n"
       "prof1,0.4,0.2,0.1,0.1,0.1,first,,false\n");
  try {
    (void)load_instance(InstanceFiles::in_dir(dir.str()));
    FAIL("expected a ValidationError");
  } catch (const ValidationError& e) {
    std::string message = e.what();
    CHECK(message.find("prof1") != std::string::npos);
    CHECK(message.find("0.9") != std::string::npos);
  }
}

TEST_CASE("load_instance: parse errors carry file, line and column") {
  TempDir dir("parse");
  write_paper_tables(dir);
  spit(dir.file("professors.csv"),
       "id,mandated_units,ga_eligible\n"
       "prof1,twelve,true\n");
  try {
    (void)load_instance(InstanceFiles::in_dir(dir.str()));
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    std::string message = e.what();
    CHECK(message.find("professors.csv:2:7") != std::string::npos);
    CHECK(message.find("integer") != std::string::npos);
  }
}

TEST_CASE("load_instance: unknown or extra columns are rejected") {
  TempDir dir("columns");
  write_paper_tables(dir);
  spit(dir.file("professors.csv"),
       "id,mandated_units,ga_eligible,shoe_size\n"
       "prof1,12,true,44\n");
  CHECK_THROWS_AS((void)load_instance(InstanceFiles::in_dir(dir.str())), ParseError);
}

TEST_CASE("load_instance: dangling references name both sides") {
  TempDir dir("dangling");
  write_paper_tables(dir);
  spit(dir.file("preassignments.csv"),
       "professor,course,section\n"
       "nobody,PHYS-121,1\n");
  try {
    (void)load_instance(InstanceFiles::in_dir(dir.str()));
    FAIL("expected a ValidationError");
  } catch (const ValidationError& e) {
    std::string message = e.what();
    CHECK(message.find("nobody") != std::string::npos);
    CHECK(message.find("PHYS-121") != std::string::npos);
  }
}

TEST_CASE("instance files round-trip through write and load") {
  GenParams params;
  params.n_professors = 11;
  params.n_sections = 30;
  params.seed = 2025;
  Instance inst = generate_instance(params);

  TempDir dir("roundtrip");
  write_instance_files(inst, dir.str());
  Instance back = load_instance(InstanceFiles::in_dir(dir.str()));

  REQUIRE(back.professor_count() == inst.professor_count());
  REQUIRE(back.section_count() == inst.section_count());
  for (int p = 0; p < inst.professor_count(); ++p) {
    CHECK(back.professors()[p].id == inst.professors()[p].id);
    CHECK(back.professors()[p].mandated_units == inst.professors()[p].mandated_units);
    const ResolvedProfile& a = inst.profile(p);
    const ResolvedProfile& b = back.profile(p);
    CHECK(a.lodged == b.lodged);
    CHECK(a.w_8am == b.w_8am);  // shortest round-trip formatting is exact
    CHECK(a.w_half == b.w_half);
    CHECK(a.w_fav == b.w_fav);
    CHECK(a.w_gap == b.w_gap);
    CHECK(a.w_prep == b.w_prep);
    CHECK(a.favorite_courses == b.favorite_courses);
  }
  for (int sec = 0; sec < inst.section_count(); ++sec) {
    CHECK(back.sections()[sec].course == inst.sections()[sec].course);
    CHECK(back.sections()[sec].meeting == inst.sections()[sec].meeting);
    CHECK(back.sections()[sec].units == inst.sections()[sec].units);
    CHECK(back.sections()[sec].room == inst.sections()[sec].room);
    CHECK(back.group_of(sec) == inst.group_of(sec));
  }

  // Writers are deterministic byte for byte.
  TempDir second("roundtrip2");
  write_instance_files(back, second.str());
  for (const char* name : {"professors.csv", "sections.csv", "associations.csv",
                           "preferences.csv", "preassignments.csv"}) {
    CHECK(slurp(dir.file(name)) == slurp(second.file(name)));
  }
}

// ---------------------------------------------------------------------------
// schedule files
// ---------------------------------------------------------------------------

namespace {

Instance desk_instance() {
  GenParams params;
  params.n_professors = 9;
  params.n_sections = 24;
  params.seed = 808;
  return generate_instance(params);
}

Schedule solved(const Instance& inst, std::uint64_t seed = 3) {
  SplitMix64 rng(seed);
  Chromosome c = random_chromosome(rng, chromosome_length_for(inst));
  return build_schedule(decode_pairings(c, inst.professor_count(), inst.section_count()),
                        inst, true);
}

}  // namespace

TEST_CASE("write_schedule: empty schedule is header plus all-unassigned rows") {
  Instance inst = desk_instance();
  Schedule s(inst.professor_count(), inst.section_count());
  TempDir dir("sched_empty");
  write_schedule(s, inst, dir.file("schedule.csv"));
  std::string text = slurp(dir.file("schedule.csv"));
  REQUIRE(!text.empty());
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == 1 + static_cast<std::size_t>(inst.section_count()));
  CHECK(text.find("\n,") != std::string::npos);  // unassigned rows: empty professor field
}

TEST_CASE("write_schedule then load_schedule reproduces the assignment map") {
  Instance inst = desk_instance();
  Schedule s = solved(inst);
  TempDir dir("sched_rt");
  write_schedule(s, inst, dir.file("schedule.csv"));

  std::string text = slurp(dir.file("schedule.csv"));
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == 1 + static_cast<std::size_t>(inst.section_count()));  // one row per section

  Schedule back = load_schedule(inst, dir.file("schedule.csv"));
  CHECK(back.same_assignments(s));
  CHECK(back.room_overrides() == s.room_overrides());

  // Byte determinism on rewrite.
  write_schedule(back, inst, dir.file("again.csv"));
  CHECK(slurp(dir.file("again.csv")) == text);
}

TEST_CASE("load_schedule: room overrides survive the round trip") {
  Instance inst = desk_instance();
  Schedule s = solved(inst);
  int sec = s.sections_of(0).empty() ? 0 : s.sections_of(0).front();
  s.set_room_override(sec, "999-0001");
  TempDir dir("sched_rooms");
  write_schedule(s, inst, dir.file("schedule.csv"));
  Schedule back = load_schedule(inst, dir.file("schedule.csv"));
  REQUIRE(back.room_overrides().count(sec) == 1);
  CHECK(back.room_overrides().at(sec) == "999-0001");
}

TEST_CASE("load_schedule: rejects rows that disagree with the instance") {
  Instance inst = desk_instance();
  Schedule s = solved(inst);
  TempDir dir("sched_bad");
  write_schedule(s, inst, dir.file("schedule.csv"));
  std::string text = slurp(dir.file("schedule.csv"));

  SUBCASE("duplicated section row") {
    std::size_t header_end = text.find('\n');
    std::size_t second_row_end = text.find('\n', header_end + 1);
    std::string dup = text.substr(header_end + 1, second_row_end - header_end);
    spit(dir.file("schedule.csv"), text + dup);
    CHECK_THROWS_AS((void)load_schedule(inst, dir.file("schedule.csv")), ParseError);
  }
  SUBCASE("missing section row") {
    std::size_t last_row = text.rfind('\n', text.size() - 2);
    spit(dir.file("schedule.csv"), text.substr(0, last_row + 1));
    CHECK_THROWS_AS((void)load_schedule(inst, dir.file("schedule.csv")), ParseError);
  }
  SUBCASE("unknown professor") {
    std::size_t header_end = text.find('\n');
    spit(dir.file("schedule.csv"),
         text.substr(0, header_end + 1) + "martian" +
             text.substr(text.find(',', header_end)));
    CHECK_THROWS_AS((void)load_schedule(inst, dir.file("schedule.csv")), ParseError);
  }
}

// ---------------------------------------------------------------------------
// facts
// ---------------------------------------------------------------------------

TEST_CASE("write_prolog_facts: the quoted figure lines, byte for byte") {
  std::vector<Professor> profs{prof("prof1", 15), prof("prof2", 15)};
  std::vector<Section> secs{
      section("ASTR-102", 1, 4, SectionMode::Lecture, block("MTWR", 17 * 60 + 10, 18 * 60),
              "180-0101", CourseKind::Speciality),
      section("PHYS-202", 1, 4, SectionMode::Lecture, block("TR", 9 * 60 + 10, 11 * 60),
              "180-0272", CourseKind::Major),
      section("PHYS-202", 2, 4, SectionMode::Lecture, block("TR", 14 * 60 + 10, 16 * 60),
              "180-0272", CourseKind::Major),
  };
  Instance inst = Instance::build(profs, secs, {}, {}, {});
  Schedule s(inst.professor_count(), inst.section_count());
  s.assign(0, 0);
  s.assign(1, 1);
  s.assign(1, 2);

  TempDir dir("facts");
  write_prolog_facts(s, inst, dir.file("facts.pl"));
  CHECK(slurp(dir.file("facts.pl")) ==
        "class(prof1,astr-102-01,mtwr,[17,10,18,00],room_180_0101).\n"
        "class(prof2,phys-202-01,tr,[09,10,11,00],room_180_0272).\n"
        "class(prof2,phys-202-02,tr,[14,10,16,00],room_180_0272).\n");
}

TEST_CASE("write_prolog_facts: empty schedule writes an empty file") {
  Instance inst = desk_instance();
  Schedule s(inst.professor_count(), inst.section_count());
  TempDir dir("facts_empty");
  write_prolog_facts(s, inst, dir.file("facts.pl"));
  CHECK(slurp(dir.file("facts.pl")).empty());
}

TEST_CASE("write_prolog_facts: bad identifiers are format errors") {
  std::vector<Professor> profs{prof("pröf", 15)};
  std::vector<Section> secs{lecture("PHYS-121", 1, 4, block("MWF", 540, 600))};
  Instance inst = Instance::build(profs, secs, {}, {}, {});
  Schedule s(1, 1);
  s.assign(0, 0);
  TempDir dir("facts_bad");
  CHECK_THROWS_AS(write_prolog_facts(s, inst, dir.file("facts.pl")), Error);
}

TEST_CASE("write_prolog_facts: every line matches the grammar") {
  Instance inst = desk_instance();
  TempDir dir("facts_grammar");
  for (int round = 0; round < 10; ++round) {
    Schedule s = solved(inst, 100 + round);
    write_prolog_facts(s, inst, dir.file("facts.pl"));
    std::string text = slurp(dir.file("facts.pl"));
    std::size_t start = 0;
    int checked_lines = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      REQUIRE(end != std::string::npos);
      std::string line = text.substr(start, end - start);
      start = end + 1;
      CHECK(line.rfind("class(", 0) == 0);
      CHECK(line.substr(line.size() - 2) == ").");
      std::string body = line.substr(6, line.size() - 8);
      // five comma-separated atoms, the time list bracketed
      int commas = 0;
      bool in_list = false;
      for (char c : body) {
        if (c == '[') in_list = true;
        if (c == ']') in_list = false;
        if (c == ',' && !in_list) ++commas;
        bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '-' ||
                  c == ',' || c == '[' || c == ']';
        CHECK(ok);
      }
      CHECK(commas == 4);
      ++checked_lines;
    }
    CHECK(checked_lines == s.assigned_count());
  }
}

// ---------------------------------------------------------------------------
// run report and explanations
// ---------------------------------------------------------------------------

TEST_CASE("write_run_report: one row per generation plus the paired breakdowns") {
  Instance inst = desk_instance();
  GAConfig cfg;
  cfg.population_size = 16;
  cfg.max_generations = 12;
  cfg.stagnation_limit = 12;
  cfg.seed = 9;
  RunResult result = run(inst, cfg);

  TempDir dir("report");
  write_run_report(result, inst, dir.file("report"));

  std::string generations = slurp(dir.file("report_generations.csv"));
  std::size_t lines = 0;
  for (char c : generations) lines += c == '\n';
  CHECK(lines == 1 + result.history.size());

  std::string professors = slurp(dir.file("report_professors.csv"));
  lines = 0;
  for (char c : professors) lines += c == '\n';
  CHECK(lines == 1 + 2 * static_cast<std::size_t>(inst.professor_count()));

  // The f_p column sums back to the reported global fitness per phase.
  double initial_sum = 0.0, final_sum = 0.0;
  std::size_t pos = professors.find('\n') + 1;
  while (pos < professors.size()) {
    std::size_t end = professors.find('\n', pos);
    std::string row = professors.substr(pos, end - pos);
    pos = end + 1;
    std::size_t last_comma = row.rfind(',');
    double f = 0.0;
    std::from_chars(row.c_str() + last_comma + 1, row.c_str() + row.size(), f);
    if (row.rfind("initial,", 0) == 0) {
      initial_sum += f;
    } else {
      final_sum += f;
    }
  }
  CHECK(initial_sum == doctest::Approx(result.initial_breakdown.global_f).epsilon(1e-12));
  CHECK(final_sum == doctest::Approx(result.best_breakdown.global_f).epsilon(1e-12));

  // Generation-0 row agrees with a zero-generation run.
  GAConfig baseline = cfg;
  baseline.max_generations = 0;
  RunResult gen0 = run(inst, baseline);
  std::string first_row = generations.substr(generations.find('\n') + 1);
  first_row = first_row.substr(0, first_row.find('\n'));
  CHECK(first_row.rfind("0,", 0) == 0);
  CHECK(result.history[0].min_fitness == gen0.best_breakdown.global_f);
}

TEST_CASE("write_explanations: professor count times eight lines") {
  Instance inst = desk_instance();
  Schedule s = solved(inst);
  TempDir dir("explain");
  write_explanations(s, inst, dir.file("explanations.txt"));
  std::string text = slurp(dir.file("explanations.txt"));
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == 8 * static_cast<std::size_t>(inst.professor_count()));

  // Parse the deltas back: per professor they sum to the header fitness.
  std::size_t pos = 0;
  for (int p = 0; p < inst.professor_count(); ++p) {
    std::size_t end = text.find('\n', pos);
    std::string header = text.substr(pos, end - pos);
    pos = end + 1;
    double f = 0.0;
    std::size_t fpos = header.rfind("fitness ");
    REQUIRE(fpos != std::string::npos);
    std::from_chars(header.c_str() + fpos + 8, header.c_str() + header.size(), f);
    double sum = 0.0;
    for (int line_i = 0; line_i < 7; ++line_i) {
      end = text.find('\n', pos);
      std::string line = text.substr(pos, end - pos);
      pos = end + 1;
      std::size_t dpos = line.rfind("delta ");
      REQUIRE(dpos != std::string::npos);
      double d = 0.0;
      std::from_chars(line.c_str() + dpos + 6, line.c_str() + line.size(), d);
      sum += d;
    }
    CHECK(sum == f);
  }
}

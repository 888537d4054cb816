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

#include <cmath>

#include "gasched/generate.hpp"
#include "gasched/io.hpp"
#include "test_support.hpp"

using namespace gasched;
using namespace testsup;

TEST_CASE("generate_instance: the paper-scale shape checks out") {
  GenParams params;
  params.n_professors = 52;
  params.n_sections = 155;
  params.seed = 42;
  Instance inst = generate_instance(params);

  CHECK(inst.professor_count() == 52);
  CHECK(inst.section_count() == 155);
  CHECK(validate_instance(inst).empty());

  int section_units = 0;
  for (const Section& s : inst.sections()) {
    section_units += s.units;
    bool shaped = (s.mode == SectionMode::Lecture && (s.units == 3 || s.units == 4)) ||
                  (s.mode == SectionMode::Laboratory && s.units == 2);
    CHECK(shaped);
    CHECK(s.meeting.start >= kDayStartMin);
    CHECK(s.meeting.end <= kDayEndMin);
  }
  int mandated = 0;
  for (const Professor& p : inst.professors()) {
    CHECK(p.mandated_units >= 2);
    CHECK(p.mandated_units <= 15);
    mandated += p.mandated_units;
  }
  // Capacity roughly matches the offered units, with a little slack.
  CHECK(mandated >= section_units);
  CHECK(mandated <= static_cast<int>(section_units * 1.25));

  // Association groups: lecture plus two labs of the same course, with
  // no internal time conflicts (otherwise atomic assignment could never
  // place them).
  CHECK(inst.group_count() > 0);
  for (int g = 0; g < inst.group_count(); ++g) {
    const auto& members = inst.group_members(g);
    REQUIRE(members.size() == 3);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        CHECK(!overlaps(inst.sections()[members[i]].meeting,
                        inst.sections()[members[j]].meeting));
        CHECK(inst.sections()[members[i]].course == inst.sections()[members[j]].course);
      }
    }
  }

  // Lodged preference weights always normalize.
  for (int p = 0; p < inst.professor_count(); ++p) {
    const ResolvedProfile& prof = inst.profile(p);
    double sum = prof.w_8am + prof.w_half + prof.w_fav + prof.w_gap + prof.w_prep;
    if (prof.lodged) {
      CHECK(std::abs(sum - 1.0) < 1e-9);
    } else {
      CHECK(sum == 0.0);
    }
  }
}

TEST_CASE("generate_instance: same seed, byte-identical files") {
  GenParams params;
  params.n_professors = 13;
  params.n_sections = 33;
  params.seed = 7;
  TempDir a("gen_a"), b("gen_b");
  write_instance_files(generate_instance(params), a.str());
  write_instance_files(generate_instance(params), b.str());
  for (const char* name : {"professors.csv", "sections.csv", "associations.csv",
                           "preferences.csv", "preassignments.csv"}) {
    CHECK(slurp(a.file(name)) == slurp(b.file(name)));
    CHECK(!slurp(a.file(name)).empty());
  }
}

TEST_CASE("generate_instance: different seeds differ") {
  GenParams a, b;
  a.n_professors = b.n_professors = 13;
  a.n_sections = b.n_sections = 33;
  a.seed = 1;
  b.seed = 2;
  Instance ia = generate_instance(a);
  Instance ib = generate_instance(b);
  bool any_difference = false;
  for (int p = 0; p < 13; ++p) {
    if (ia.professors()[p].mandated_units != ib.professors()[p].mandated_units) {
      any_difference = true;
    }
  }
  for (int s = 0; s < 33 && !any_difference; ++s) {
    if (!(ia.sections()[s].meeting == ib.sections()[s].meeting)) any_difference = true;
  }
  CHECK(any_difference);
}

TEST_CASE("generate_instance: infeasible parameters are errors") {
  GenParams params;
  params.n_professors = 0;
  params.n_sections = 10;
  CHECK_THROWS_AS((void)generate_instance(params), Error);
  params.n_professors = 5;
  params.n_sections = 0;
  CHECK_THROWS_AS((void)generate_instance(params), Error);
  params.n_sections = 10;
  params.preference_density = 1.5;
  CHECK_THROWS_AS((void)generate_instance(params), Error);
  params.preference_density = 0.5;
  params.lecture_lab_ratio = -0.1;
  CHECK_THROWS_AS((void)generate_instance(params), Error);
}

TEST_CASE("generate_instance: tiny instances still validate") {
  GenParams params;
  params.n_professors = 1;
  params.n_sections = 1;
  params.seed = 5;
  Instance inst = generate_instance(params);
  CHECK(inst.section_count() == 1);
  CHECK(validate_instance(inst).empty());
}

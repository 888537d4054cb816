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

// Exercises the shared-library surface end to end: generate, load, solve,
// write artifacts, audit, suggest, apply, plus the error paths. Uses only
// gasched.h, exactly like an external consumer.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "gasched.h"

namespace {

struct Dir {
  std::filesystem::path path;
  explicit Dir(const char* tag) {
    static int counter = 0;
    path = std::filesystem::path("gasched_capi_tmp") / (tag + std::to_string(counter++));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~Dir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const char* name) const { return (path / name).string(); }
  std::string str() const { return path.string(); }
};

bool file_nonempty(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return in && in.peek() != std::char_traits<char>::eof();
}

}  // namespace

TEST_CASE("config defaults carry the reference algorithm parameters") {
  gas_ga_config cfg;
  gas_ga_config_init(&cfg);
  CHECK(cfg.population_size == 100);
  CHECK(cfg.crossover_prob == 0.25);
  CHECK(cfg.mutation_prob == 0.01);
  CHECK(cfg.max_generations == 400);
  CHECK(cfg.stagnation_limit == 400);
  CHECK(cfg.enforce_associations == 1);
  CHECK(cfg.decode_policy == 0);
  CHECK(cfg.class_slot_factor == 2.6);
  CHECK(cfg.workers == 1);
}

TEST_CASE("full pipeline through the C API") {
  Dir dir("pipeline");

  gas_gen_params gen;
  gas_gen_params_init(&gen);
  gen.n_professors = 10;
  gen.n_sections = 27;
  gen.seed = 11;
  REQUIRE(gas_generate_instance(&gen, dir.str().c_str()) == GAS_OK);

  gas_instance* inst = nullptr;
  REQUIRE(gas_instance_load_dir(dir.str().c_str(), &inst) == GAS_OK);
  REQUIRE(inst != nullptr);
  CHECK(gas_instance_professor_count(inst) == 10);
  CHECK(gas_instance_section_count(inst) == 27);

  char* report = nullptr;
  int32_t errors = -1, warnings = -1;
  REQUIRE(gas_instance_validation_report(inst, &report, &errors, &warnings) == GAS_OK);
  CHECK(errors == 0);
  CHECK(warnings == 0);
  CHECK(std::strlen(report) == 0);
  gas_text_free(report);

  gas_ga_config cfg;
  gas_ga_config_init(&cfg);
  cfg.population_size = 20;
  cfg.max_generations = 25;
  cfg.stagnation_limit = 25;
  cfg.seed = 3;
  cfg.workers = 2;

  gas_result* result = nullptr;
  REQUIRE(gas_solve(inst, &cfg, &result) == GAS_OK);
  CHECK(gas_result_generations(result) == 25);
  CHECK(gas_result_best_fitness(result) <= gas_result_initial_fitness(result));
  CHECK(gas_result_assigned_count(result) > 0);

  gas_schedule* best = nullptr;
  REQUIRE(gas_result_best_schedule(result, &best) == GAS_OK);
  CHECK(gas_schedule_fitness(best) == gas_result_best_fitness(result));
  CHECK(gas_schedule_assigned_count(best) == gas_result_assigned_count(result));

  REQUIRE(gas_schedule_write(best, dir.file("schedule.csv").c_str()) == GAS_OK);
  REQUIRE(gas_result_write_report(result, dir.file("report").c_str()) == GAS_OK);
  REQUIRE(gas_schedule_write_explanations(best, dir.file("explanations.txt").c_str()) ==
          GAS_OK);
  REQUIRE(gas_schedule_write_facts(best, dir.file("facts.pl").c_str()) == GAS_OK);
  CHECK(file_nonempty(dir.file("schedule.csv")));
  CHECK(file_nonempty(dir.file("report_generations.csv")));
  CHECK(file_nonempty(dir.file("report_professors.csv")));
  CHECK(file_nonempty(dir.file("explanations.txt")));
  CHECK(file_nonempty(dir.file("facts.pl")));

  // Deterministic rerun: identical headline numbers.
  gas_result* rerun = nullptr;
  REQUIRE(gas_solve(inst, &cfg, &rerun) == GAS_OK);
  CHECK(gas_result_best_fitness(rerun) == gas_result_best_fitness(result));
  gas_result_free(rerun);

  // The GA's own output audits clean.
  char* problems_text = nullptr;
  int32_t problems = -1;
  gas_schedule* reloaded = nullptr;
  REQUIRE(gas_schedule_load(inst, dir.file("schedule.csv").c_str(), &reloaded) == GAS_OK);
  REQUIRE(gas_schedule_check(reloaded, &problems_text, &problems) == GAS_OK);
  CHECK(problems == 0);
  gas_text_free(problems_text);

  gas_suggestions* suggestions = nullptr;
  REQUIRE(gas_schedule_suggest(reloaded, &suggestions) == GAS_OK);
  int32_t count = gas_suggestions_count(suggestions);
  CHECK(count >= 0);
  if (count > 0) {
    CHECK(gas_suggestions_text(suggestions, 0) != nullptr);
    gas_schedule* revised = nullptr;
    REQUIRE(gas_suggestions_apply(suggestions, 0, &revised) == GAS_OK);
    char* revised_report = nullptr;
    int32_t revised_problems = -1;
    REQUIRE(gas_schedule_check(revised, &revised_report, &revised_problems) == GAS_OK);
    CHECK(revised_problems == 0);
    gas_text_free(revised_report);
    gas_schedule_free(revised);
  }
  CHECK(gas_suggestions_text(suggestions, count) == nullptr);

  gas_suggestions_free(suggestions);
  gas_schedule_free(reloaded);
  gas_schedule_free(best);
  gas_result_free(result);
  gas_instance_free(inst);
}

TEST_CASE("error paths set status codes and messages") {
  gas_instance* inst = nullptr;

  SUBCASE("missing files") {
    CHECK(gas_instance_load_dir("no/such/dir", &inst) == GAS_ERROR_PARSE);
    CHECK(std::strlen(gas_last_error()) > 0);
    CHECK(inst == nullptr);
  }

  SUBCASE("null arguments") {
    CHECK(gas_instance_load_dir(nullptr, &inst) == GAS_ERROR_ARGUMENT);
    CHECK(gas_solve(nullptr, nullptr, nullptr) == GAS_ERROR_ARGUMENT);
    CHECK(gas_instance_professor_count(nullptr) == -1);
  }

  SUBCASE("validation failures carry the violation list") {
    Dir dir("invalid");
    gas_gen_params gen;
    gas_gen_params_init(&gen);
    gen.n_professors = 3;
    gen.n_sections = 6;
    REQUIRE(gas_generate_instance(&gen, dir.str().c_str()) == GAS_OK);
    // Corrupt the weights so they sum to 0.9.
    std::ofstream prefs(dir.file("preferences.csv"), std::ios::binary);
    prefs << "professor,w_8am,w_half,w_fav,w_gap,w_prep,half_choice,favorites,avoid_8am\n"
          << "prof1,0.4,0.2,0.1,0.1,0.1,first,,false\n";
    prefs.close();
    CHECK(gas_instance_load_dir(dir.str().c_str(), &inst) == GAS_ERROR_VALIDATION);
    CHECK(std::string(gas_last_error()).find("prof1") != std::string::npos);
  }

  SUBCASE("bad generator parameters") {
    gas_gen_params gen;
    gas_gen_params_init(&gen);
    gen.n_professors = 0;
    CHECK(gas_generate_instance(&gen, ".") != GAS_OK);
  }

  SUBCASE("bad solver config") {
    Dir dir("badcfg");
    gas_gen_params gen;
    gas_gen_params_init(&gen);
    gen.n_professors = 3;
    gen.n_sections = 6;
    REQUIRE(gas_generate_instance(&gen, dir.str().c_str()) == GAS_OK);
    REQUIRE(gas_instance_load_dir(dir.str().c_str(), &inst) == GAS_OK);
    gas_ga_config cfg;
    gas_ga_config_init(&cfg);
    cfg.population_size = 7;  // odd
    gas_result* result = nullptr;
    CHECK(gas_solve(inst, &cfg, &result) != GAS_OK);
    CHECK(result == nullptr);
    gas_instance_free(inst);
  }
}

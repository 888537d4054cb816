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

// gasched command line: batch solving, schedule auditing and synthetic
// instance generation. Talks to the solver exclusively through the C API
// in gasched.h. All diagnostics go to stderr; artifacts go to disk.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "gasched.h"

namespace {

struct InstanceDeleter {
  void operator()(gas_instance* p) const { gas_instance_free(p); }
};
struct ResultDeleter {
  void operator()(gas_result* p) const { gas_result_free(p); }
};
struct ScheduleDeleter {
  void operator()(gas_schedule* p) const { gas_schedule_free(p); }
};
struct SuggestionsDeleter {
  void operator()(gas_suggestions* p) const { gas_suggestions_free(p); }
};

using InstancePtr = std::unique_ptr<gas_instance, InstanceDeleter>;
using ResultPtr = std::unique_ptr<gas_result, ResultDeleter>;
using SchedulePtr = std::unique_ptr<gas_schedule, ScheduleDeleter>;
using SuggestionsPtr = std::unique_ptr<gas_suggestions, SuggestionsDeleter>;

int fail(const char* what) {
  std::fprintf(stderr, "gasched: %s: %s\n", what, gas_last_error());
  return 1;
}

bool ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::fprintf(stderr, "gasched: cannot create directory %s: %s\n", dir.c_str(),
                 ec.message().c_str());
    return false;
  }
  return true;
}

InstancePtr load_instance_or_exit(const std::string& dir, int& exit_code) {
  gas_instance* raw = nullptr;
  if (gas_instance_load_dir(dir.c_str(), &raw) != GAS_OK) {
    exit_code = fail("cannot load instance");
    return nullptr;
  }
  InstancePtr inst(raw);
  char* report = nullptr;
  int32_t warnings = 0;
  if (gas_instance_validation_report(inst.get(), &report, nullptr, &warnings) == GAS_OK) {
    if (warnings > 0) std::fprintf(stderr, "%s", report);
    gas_text_free(report);
  }
  return inst;
}

SchedulePtr load_schedule_or_exit(const gas_instance* inst, const std::string& path,
                                  int& exit_code) {
  gas_schedule* raw = nullptr;
  if (gas_schedule_load(inst, path.c_str(), &raw) != GAS_OK) {
    exit_code = fail("cannot load schedule");
    return nullptr;
  }
  return SchedulePtr(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GA-driven assignment of class sections to professors"};
  app.require_subcommand(1);

  // --- solve -------------------------------------------------------------
  std::string solve_instance_dir;
  std::string solve_out_dir = ".";
  gas_ga_config cfg;
  gas_ga_config_init(&cfg);
  bool enforce_assoc = cfg.enforce_associations != 0;
  std::string decode_policy = "modulo";

  CLI::App* solve = app.add_subcommand(
      "solve", "Run the genetic algorithm and write schedule, report, explanations and facts");
  solve->add_option("--instance", solve_instance_dir,
                    "Directory with the five instance CSVs")->required();
  solve->add_option("--out", solve_out_dir, "Output directory (created if missing)")
      ->capture_default_str();
  solve->add_option("--population", cfg.population_size, "Population size")
      ->capture_default_str();
  solve->add_option("--crossover-prob", cfg.crossover_prob,
                    "Per-pair crossover probability")->capture_default_str();
  solve->add_option("--mutation-prob", cfg.mutation_prob,
                    "Per-bit mutation probability")->capture_default_str();
  solve->add_option("--generations", cfg.max_generations,
                    "Generation budget")->capture_default_str();
  solve->add_option("--stagnation", cfg.stagnation_limit,
                    "Stop after this many generations without a new global best")
      ->capture_default_str();
  solve->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  solve->add_option("--enforce-associations", enforce_assoc,
                    "Assign lecture+lab associations atomically")->capture_default_str();
  solve->add_option("--decode-policy", decode_policy,
                    "Out-of-range chunk handling: modulo or skip")
      ->check(CLI::IsMember({"modulo", "skip"}))->capture_default_str();
  solve->add_option("--class-slot-factor", cfg.class_slot_factor,
                    "Chromosome pairing slots per class (>= 1)")->capture_default_str();
  solve->add_option("--workers", cfg.workers,
                    "Parallel fitness evaluation threads (never changes results)")
      ->capture_default_str();

  // --- validate ----------------------------------------------------------
  std::string val_instance_dir;
  std::string val_schedule;
  CLI::App* validate = app.add_subcommand(
      "validate", "Re-check hard constraints and time conflicts of a schedule file");
  validate->add_option("--instance", val_instance_dir,
                       "Directory with the five instance CSVs")->required();
  validate->add_option("--schedule", val_schedule, "Schedule CSV to check")->required();

  // --- suggest -----------------------------------------------------------
  std::string sug_instance_dir;
  std::string sug_schedule;
  std::string sug_out;
  int sug_apply = -1;
  CLI::App* suggest = app.add_subcommand(
      "suggest", "List post-optimization swap suggestions; --apply rewrites the schedule");
  suggest->add_option("--instance", sug_instance_dir,
                      "Directory with the five instance CSVs")->required();
  suggest->add_option("--schedule", sug_schedule, "Schedule CSV to audit")->required();
  suggest->add_option("--apply", sug_apply, "Apply suggestion N and write the result");
  suggest->add_option("--out", sug_out, "Output path for the revised schedule");

  // --- gen ---------------------------------------------------------------
  gas_gen_params gen_params;
  gas_gen_params_init(&gen_params);
  std::string gen_out_dir;
  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic desk-scale instance");
  gen->add_option("--professors", gen_params.n_professors, "Professor count")
      ->capture_default_str();
  gen->add_option("--sections", gen_params.n_sections, "Section count")
      ->capture_default_str();
  gen->add_option("--lecture-lab-ratio", gen_params.lecture_lab_ratio,
                  "Fraction of sections that are lectures")->capture_default_str();
  gen->add_option("--seed", gen_params.seed, "Random seed")->capture_default_str();
  gen->add_option("--preference-density", gen_params.preference_density,
                  "Fraction of professors lodging preferences")->capture_default_str();
  gen->add_option("--out", gen_out_dir, "Directory for the five CSVs (created if missing)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    cfg.enforce_associations = enforce_assoc ? 1 : 0;
    cfg.decode_policy = decode_policy == "skip" ? 1 : 0;

    if (!ensure_directory(solve_out_dir)) return 1;
    int exit_code = 0;
    InstancePtr inst = load_instance_or_exit(solve_instance_dir, exit_code);
    if (!inst) return exit_code;

    auto started = std::chrono::steady_clock::now();
    gas_result* raw_result = nullptr;
    if (gas_solve(inst.get(), &cfg, &raw_result) != GAS_OK) return fail("solve failed");
    ResultPtr result(raw_result);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                      .count();

    gas_schedule* raw_best = nullptr;
    if (gas_result_best_schedule(result.get(), &raw_best) != GAS_OK) {
      return fail("cannot extract best schedule");
    }
    SchedulePtr best(raw_best);

    const std::string schedule_path = solve_out_dir + "/schedule.csv";
    const std::string report_prefix = solve_out_dir + "/report";
    const std::string explanations_path = solve_out_dir + "/explanations.txt";
    const std::string facts_path = solve_out_dir + "/facts.pl";
    if (gas_schedule_write(best.get(), schedule_path.c_str()) != GAS_OK ||
        gas_result_write_report(result.get(), report_prefix.c_str()) != GAS_OK ||
        gas_schedule_write_explanations(best.get(), explanations_path.c_str()) != GAS_OK ||
        gas_schedule_write_facts(best.get(), facts_path.c_str()) != GAS_OK) {
      return fail("cannot write artifacts");
    }

    std::printf("fitness %.6f (generation 0: %.6f)\n",
                gas_result_best_fitness(result.get()),
                gas_result_initial_fitness(result.get()));
    std::printf("assigned %d/%d sections\n", gas_result_assigned_count(result.get()),
                gas_instance_section_count(inst.get()));
    std::printf("generations %d\n", gas_result_generations(result.get()));
    std::printf("wall %.2fs\n", wall);
    return 0;
  }

  if (validate->parsed()) {
    int exit_code = 0;
    InstancePtr inst = load_instance_or_exit(val_instance_dir, exit_code);
    if (!inst) return exit_code;
    SchedulePtr schedule = load_schedule_or_exit(inst.get(), val_schedule, exit_code);
    if (!schedule) return exit_code;

    char* report = nullptr;
    int32_t problems = 0;
    if (gas_schedule_check(schedule.get(), &report, &problems) != GAS_OK) {
      return fail("check failed");
    }
    if (problems > 0) {
      std::fprintf(stderr, "%s", report);
      gas_text_free(report);
      std::fprintf(stderr, "gasched: schedule has %d problem(s)\n", problems);
      return 1;
    }
    gas_text_free(report);
    std::printf("schedule is clean\n");
    return 0;
  }

  if (suggest->parsed()) {
    int exit_code = 0;
    InstancePtr inst = load_instance_or_exit(sug_instance_dir, exit_code);
    if (!inst) return exit_code;
    SchedulePtr schedule = load_schedule_or_exit(inst.get(), sug_schedule, exit_code);
    if (!schedule) return exit_code;

    gas_suggestions* raw_suggestions = nullptr;
    if (gas_schedule_suggest(schedule.get(), &raw_suggestions) != GAS_OK) {
      return fail("suggestion search failed");
    }
    SuggestionsPtr suggestions(raw_suggestions);
    int32_t count = gas_suggestions_count(suggestions.get());

    if (sug_apply < 0) {
      if (count == 0) {
        std::printf("no suggestions\n");
        return 0;
      }
      for (int32_t i = 0; i < count; ++i) {
        std::printf("suggestion %d %s", i, gas_suggestions_text(suggestions.get(), i));
      }
      return 0;
    }

    if (sug_out.empty()) {
      std::fprintf(stderr, "gasched: --apply requires --out for the revised schedule\n");
      return 1;
    }
    gas_schedule* raw_revised = nullptr;
    if (gas_suggestions_apply(suggestions.get(), sug_apply, &raw_revised) != GAS_OK) {
      return fail("cannot apply suggestion");
    }
    SchedulePtr revised(raw_revised);
    if (gas_schedule_write(revised.get(), sug_out.c_str()) != GAS_OK) {
      return fail("cannot write revised schedule");
    }
    std::printf("applied suggestion %d -> %s\n", sug_apply, sug_out.c_str());
    return 0;
  }

  if (gen->parsed()) {
    if (!ensure_directory(gen_out_dir)) return 1;
    if (gas_generate_instance(&gen_params, gen_out_dir.c_str()) != GAS_OK) {
      return fail("generation failed");
    }
    std::printf("wrote instance (%d professors, %d sections) to %s\n",
                gen_params.n_professors, gen_params.n_sections, gen_out_dir.c_str());
    return 0;
  }

  return 0;
}

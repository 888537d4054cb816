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

#include "gasched.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "gasched/domain.hpp"
#include "gasched/engine.hpp"
#include "gasched/fitness.hpp"
#include "gasched/generate.hpp"
#include "gasched/io.hpp"
#include "gasched/postopt.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

/// Maps the core exception hierarchy onto status codes; every API entry
/// point funnels through here so no exception escapes the C boundary.
template <typename Fn>
gas_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const gasched::ParseError& e) {
    set_error(e.what());
    return GAS_ERROR_PARSE;
  } catch (const gasched::ValidationError& e) {
    set_error(e.what());
    return GAS_ERROR_VALIDATION;
  } catch (const gasched::StaleSuggestionError& e) {
    set_error(e.what());
    return GAS_ERROR_STALE;
  } catch (const gasched::Error& e) {
    set_error(e.what());
    return GAS_ERROR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return GAS_ERROR_INTERNAL;
  }
}

char* copy_text(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct gas_instance {
  std::shared_ptr<const gasched::Instance> inst;
  std::vector<gasched::Violation> warnings;
};

struct gas_result {
  std::shared_ptr<const gasched::Instance> inst;
  gasched::RunResult result;
};

struct gas_schedule {
  std::shared_ptr<const gasched::Instance> inst;
  gasched::Schedule schedule;
};

struct gas_suggestions {
  std::shared_ptr<const gasched::Instance> inst;
  gasched::Schedule base;
  std::vector<gasched::SwapSuggestion> items;
  std::vector<std::string> texts;
};

extern "C" {

const char* gas_last_error(void) { return g_last_error.c_str(); }

const char* gas_version(void) { return "1.0.0"; }

void gas_text_free(char* text) { std::free(text); }

gas_status gas_instance_load(const char* professors_csv, const char* sections_csv,
                             const char* associations_csv, const char* preferences_csv,
                             const char* preassignments_csv, gas_instance** out) {
  if (!professors_csv || !sections_csv || !associations_csv || !preferences_csv ||
      !preassignments_csv || !out) {
    set_error("gas_instance_load: null argument");
    return GAS_ERROR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    gasched::InstanceFiles files{professors_csv, sections_csv, associations_csv,
                                 preferences_csv, preassignments_csv};
    auto handle = std::make_unique<gas_instance>();
    handle->inst = std::make_shared<const gasched::Instance>(
        gasched::load_instance(files, &handle->warnings));
    *out = handle.release();
    return GAS_OK;
  });
}

gas_status gas_instance_load_dir(const char* dir, gas_instance** out) {
  if (!dir || !out) {
    set_error("gas_instance_load_dir: null argument");
    return GAS_ERROR_ARGUMENT;
  }
  auto files = gasched::InstanceFiles::in_dir(dir);
  return gas_instance_load(files.professors.c_str(), files.sections.c_str(),
                           files.associations.c_str(), files.preferences.c_str(),
                           files.preassignments.c_str(), out);
}

void gas_instance_free(gas_instance* inst) { delete inst; }

int32_t gas_instance_professor_count(const gas_instance* inst) {
  return inst ? inst->inst->professor_count() : -1;
}

int32_t gas_instance_section_count(const gas_instance* inst) {
  return inst ? inst->inst->section_count() : -1;
}

gas_status gas_instance_validation_report(const gas_instance* inst, char** report,
                                          int32_t* errors, int32_t* warnings) {
  if (!inst || !report) {
    set_error("gas_instance_validation_report: null argument");
    return GAS_ERROR_ARGUMENT;
  }
  return guarded([&] {
    auto violations = gasched::validate_instance(*inst->inst);
    int32_t error_count = 0;
    int32_t warning_count = 0;
    for (const auto& v : violations) {
      if (v.severity == gasched::Violation::Severity::Error) {
        ++error_count;
      } else {
        ++warning_count;
      }
    }
    *report = copy_text(gasched::format_violations(violations));
    if (errors) *errors = error_count;
    if (warnings) *warnings = warning_count;
    return GAS_OK;
  });
}

void gas_gen_params_init(gas_gen_params* params) {
  if (!params) return;
  gasched::GenParams defaults;
  params->n_professors = defaults.n_professors;
  params->n_sections = defaults.n_sections;
  params->lecture_lab_ratio = defaults.lecture_lab_ratio;
  params->seed = defaults.seed;
  params->preference_density = defaults.preference_density;
}

gas_status gas_generate_instance(const gas_gen_params* params, const char* dir) {
  if (!params || !dir) {
    set_error("gas_generate_instance: null argument");
    return GAS_ERROR_ARGUMENT;
  }
  return guarded([&] {
    gasched::GenParams p;
    p.n_professors = params->n_professors;
    p.n_sections = params->n_sections;
    p.lecture_lab_ratio = params->lecture_lab_ratio;
    p.seed = params->seed;
    p.preference_density = params->preference_density;
    gasched::Instance inst = gasched::generate_instance(p);
    gasched::write_instance_files(inst, dir);
    return GAS_OK;
  });
}

void gas_ga_config_init(gas_ga_config* cfg) {
  if (!cfg) return;
  gasched::GAConfig defaults;
  cfg->population_size = defaults.population_size;
  cfg->crossover_prob = defaults.crossover_prob;
  cfg->mutation_prob = defaults.mutation_prob;
  cfg->max_generations = defaults.max_generations;
  cfg->stagnation_limit = defaults.stagnation_limit;
  cfg->seed = defaults.seed;
  cfg->enforce_associations = defaults.enforce_associations ? 1 : 0;
  cfg->decode_policy = 0;
  cfg->class_slot_factor = defaults.class_slot_factor;
  cfg->workers = defaults.workers;
}

gas_status gas_solve(const gas_instance* inst, const gas_ga_config* cfg, gas_result** out) {
  if (!inst || !cfg || !out) {
    set_error("gas_solve: null argument");
    return GAS_ERROR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    gasched::GAConfig config;
    config.population_size = cfg->population_size;
    config.crossover_prob = cfg->crossover_prob;
    config.mutation_prob = cfg->mutation_prob;
    config.max_generations = cfg->max_generations;
    config.stagnation_limit = cfg->stagnation_limit;
    config.seed = cfg->seed;
    config.enforce_associations = cfg->enforce_associations != 0;
    config.decode_policy =
        cfg->decode_policy == 0 ? gasched::DecodePolicy::Modulo : gasched::DecodePolicy::Skip;
    config.class_slot_factor = cfg->class_slot_factor;
    config.workers = cfg->workers;
    auto handle = std::make_unique<gas_result>();
    handle->inst = inst->inst;
    handle->result = gasched::run(*inst->inst, config);
    *out = handle.release();
    return GAS_OK;
  });
}

void gas_result_free(gas_result* result) { delete result; }

double gas_result_best_fitness(const gas_result* result) {
  return result ? result->result.best_breakdown.global_f : -1.0;
}

double gas_result_initial_fitness(const gas_result* result) {
  return result ? result->result.initial_breakdown.global_f : -1.0;
}

int32_t gas_result_generations(const gas_result* result) {
  return result ? result->result.generations_run : -1;
}

int32_t gas_result_assigned_count(const gas_result* result) {
  return result ? result->result.best_schedule.assigned_count() : -1;
}

gas_status gas_result_best_schedule(const gas_result* result, gas_schedule** out) {
  if (!result || !out) {
    set_error("gas_result_best_schedule: null argument");
    return GAS_ERROR_ARGUMENT;
  }
  *out = new gas_schedule{result->inst, result->result.best_schedule};
  return GAS_OK;
}

gas_status gas_result_write_report(const gas_result* result, const char* path_prefix) {
  if (!result || !path_prefix) {
    set_error("gas_result_write_report: null argument");
    return GAS_ERROR_ARGUMENT;
  }
  return guarded([&] {
    gasched::write_run_report(result->result, *result->inst, path_prefix);
    return GAS_OK;
  });
}

gas_status gas_schedule_load(const gas_instance* inst, const char* path, gas_schedule** out) {
  if (!inst || !path || !out) {
    set_error("gas_schedule_load: null argument");
    return GAS_ERROR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<gas_schedule>();
    handle->inst = inst->inst;
    handle->schedule = gasched::load_schedule(*inst->inst, path);
    *out = handle.release();
    return GAS_OK;
  });
}

void gas_schedule_free(gas_schedule* schedule) { delete schedule; }

gas_status gas_schedule_write(const gas_schedule* schedule, const char* path) {
  if (!schedule || !path) {
    set_error("gas_schedule_write: null argument");
    return GAS_ERROR_ARGUMENT;
  }
  return guarded([&] {
    gasched::write_schedule(schedule->schedule, *schedule->inst, path);
    return GAS_OK;
  });
}

gas_status gas_schedule_write_facts(const gas_schedule* schedule, const char* path) {
  if (!schedule || !path) {
    set_error("gas_schedule_write_facts: null argument");
    return GAS_ERROR_ARGUMENT;
  }
  return guarded([&] {
    gasched::write_prolog_facts(schedule->schedule, *schedule->inst, path);
    return GAS_OK;
  });
}

gas_status gas_schedule_write_explanations(const gas_schedule* schedule, const char* path) {
  if (!schedule || !path) {
    set_error("gas_schedule_write_explanations: null argument");
    return GAS_ERROR_ARGUMENT;
  }
  return guarded([&] {
    gasched::write_explanations(schedule->schedule, *schedule->inst, path);
    return GAS_OK;
  });
}

double gas_schedule_fitness(const gas_schedule* schedule) {
  if (!schedule) return -1.0;
  try {
    return gasched::global_fitness_value(schedule->schedule, *schedule->inst);
  } catch (const std::exception& e) {
    set_error(e.what());
    return -1.0;
  }
}

int32_t gas_schedule_assigned_count(const gas_schedule* schedule) {
  return schedule ? schedule->schedule.assigned_count() : -1;
}

gas_status gas_schedule_check(const gas_schedule* schedule, char** report, int32_t* problems) {
  if (!schedule || !report) {
    set_error("gas_schedule_check: null argument");
    return GAS_ERROR_ARGUMENT;
  }
  return guarded([&] {
    const gasched::Instance& inst = *schedule->inst;
    const gasched::Schedule& s = schedule->schedule;
    std::string text;
    int32_t count = 0;
    for (int p = 0; p < inst.professor_count(); ++p) {
      int load = gasched::professor_load(s, inst, p);
      if (load > inst.professors()[p].mandated_units) {
        text += "unit overrun: " + inst.professors()[p].id + " carries " +
                std::to_string(load) + " units, mandated " +
                std::to_string(inst.professors()[p].mandated_units) + "\n";
        ++count;
      }
    }
    for (const gasched::Conflict& c : gasched::find_conflicts(s, inst)) {
      const gasched::Section& a = inst.sections()[c.first];
      const gasched::Section& b = inst.sections()[c.second];
      text += "conflict between " + a.course + "-" + std::to_string(a.section_no) + " and " +
              b.course + "-" + std::to_string(b.section_no) + " (" +
              inst.professors()[c.professor].id + ")\n";
      ++count;
    }
    *report = copy_text(text);
    if (problems) *problems = count;
    return GAS_OK;
  });
}

gas_status gas_schedule_suggest(const gas_schedule* schedule, gas_suggestions** out) {
  if (!schedule || !out) {
    set_error("gas_schedule_suggest: null argument");
    return GAS_ERROR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<gas_suggestions>();
    handle->inst = schedule->inst;
    handle->base = schedule->schedule;
    handle->items = gasched::find_all_suggestions(schedule->schedule, *schedule->inst);
    handle->texts.reserve(handle->items.size());
    for (const auto& item : handle->items) {
      handle->texts.push_back(
          gasched::format_suggestion(*schedule->inst, schedule->schedule, item));
    }
    *out = handle.release();
    return GAS_OK;
  });
}

void gas_suggestions_free(gas_suggestions* suggestions) { delete suggestions; }

int32_t gas_suggestions_count(const gas_suggestions* suggestions) {
  return suggestions ? static_cast<int32_t>(suggestions->items.size()) : -1;
}

const char* gas_suggestions_text(const gas_suggestions* suggestions, int32_t index) {
  if (!suggestions || index < 0 ||
      index >= static_cast<int32_t>(suggestions->texts.size())) {
    return nullptr;
  }
  return suggestions->texts[index].c_str();
}

gas_status gas_suggestions_apply(const gas_suggestions* suggestions, int32_t index,
                                 gas_schedule** out) {
  if (!suggestions || !out) {
    set_error("gas_suggestions_apply: null argument");
    return GAS_ERROR_ARGUMENT;
  }
  if (index < 0 || index >= static_cast<int32_t>(suggestions->items.size())) {
    set_error("gas_suggestions_apply: index " + std::to_string(index) + " out of range");
    return GAS_ERROR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<gas_schedule>();
    handle->inst = suggestions->inst;
    handle->schedule = gasched::apply_swap(suggestions->base, *suggestions->inst,
                                           suggestions->items[index]);
    *out = handle.release();
    return GAS_OK;
  });
}

}  // extern "C"

/* Copyright 2026 The gasched Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the gasched shared library.
 *
 * Every object is an opaque handle created by a gas_*_load/solve/suggest
 * call and released with the matching gas_*_free. Functions return
 * GAS_OK (0) on success; on failure they return a nonzero status and leave
 * a message in gas_last_error() (thread-local, valid until the next call
 * on the same thread). Strings returned through char** are heap copies the
 * caller releases with gas_text_free. Handles are not thread-safe; use one
 * per thread or add external locking.
 */

#ifndef GASCHED_H
#define GASCHED_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gas_status {
  GAS_OK = 0,
  GAS_ERROR_ARGUMENT = 1,   /* bad parameter or null handle */
  GAS_ERROR_IO = 2,         /* file cannot be read or written */
  GAS_ERROR_PARSE = 3,      /* malformed input file */
  GAS_ERROR_VALIDATION = 4, /* instance or schedule breaks an invariant */
  GAS_ERROR_STALE = 5,      /* suggestion no longer matches the schedule */
  GAS_ERROR_INTERNAL = 6
} gas_status;

typedef struct gas_instance gas_instance;
typedef struct gas_result gas_result;
typedef struct gas_schedule gas_schedule;
typedef struct gas_suggestions gas_suggestions;

/* Message for the most recent failure on this thread; never NULL. */
const char *gas_last_error(void);

const char *gas_version(void);

void gas_text_free(char *text);

/* ------------------------------------------------------------------ */
/* Instances                                                           */
/* ------------------------------------------------------------------ */

gas_status gas_instance_load(const char *professors_csv, const char *sections_csv,
                             const char *associations_csv, const char *preferences_csv,
                             const char *preassignments_csv, gas_instance **out);

/* The five conventional CSVs (professors.csv, sections.csv,
 * associations.csv, preferences.csv, preassignments.csv) under one
 * directory. */
gas_status gas_instance_load_dir(const char *dir, gas_instance **out);

void gas_instance_free(gas_instance *inst);

int32_t gas_instance_professor_count(const gas_instance *inst);
int32_t gas_instance_section_count(const gas_instance *inst);

/* Validation report, one line per finding ("error: ..." / "warning: ...").
 * Counts may be NULL. A loaded instance can only carry warnings. */
gas_status gas_instance_validation_report(const gas_instance *inst, char **report,
                                          int32_t *errors, int32_t *warnings);

/* ------------------------------------------------------------------ */
/* Synthetic instance generation                                       */
/* ------------------------------------------------------------------ */

typedef struct gas_gen_params {
  int32_t n_professors;
  int32_t n_sections;
  double lecture_lab_ratio;   /* fraction of sections that are lectures */
  uint64_t seed;
  double preference_density;  /* fraction of professors lodging preferences */
} gas_gen_params;

void gas_gen_params_init(gas_gen_params *params);

/* Writes the five instance CSVs into dir (which must exist). */
gas_status gas_generate_instance(const gas_gen_params *params, const char *dir);

/* ------------------------------------------------------------------ */
/* Solving                                                             */
/* ------------------------------------------------------------------ */

typedef struct gas_ga_config {
  int32_t population_size;    /* default 100 */
  double crossover_prob;      /* default 0.25 */
  double mutation_prob;       /* default 0.01 */
  int32_t max_generations;    /* default 400 */
  int32_t stagnation_limit;   /* default 400 */
  uint64_t seed;
  int32_t enforce_associations; /* default 1: lecture+labs assigned atomically */
  int32_t decode_policy;        /* 0 modulo (default), 1 skip */
  double class_slot_factor;     /* pairing slots per class, >= 1 (default 2.6) */
  int32_t workers;              /* parallel evaluation; results identical for any value */
} gas_ga_config;

void gas_ga_config_init(gas_ga_config *cfg);

gas_status gas_solve(const gas_instance *inst, const gas_ga_config *cfg, gas_result **out);
void gas_result_free(gas_result *result);

double gas_result_best_fitness(const gas_result *result);
double gas_result_initial_fitness(const gas_result *result);
int32_t gas_result_generations(const gas_result *result);
int32_t gas_result_assigned_count(const gas_result *result);

/* Best schedule as a standalone handle (shares the instance internally). */
gas_status gas_result_best_schedule(const gas_result *result, gas_schedule **out);

/* <prefix>_generations.csv and <prefix>_professors.csv. */
gas_status gas_result_write_report(const gas_result *result, const char *path_prefix);

/* ------------------------------------------------------------------ */
/* Schedules                                                           */
/* ------------------------------------------------------------------ */

gas_status gas_schedule_load(const gas_instance *inst, const char *path, gas_schedule **out);
void gas_schedule_free(gas_schedule *schedule);

gas_status gas_schedule_write(const gas_schedule *schedule, const char *path);
gas_status gas_schedule_write_facts(const gas_schedule *schedule, const char *path);
gas_status gas_schedule_write_explanations(const gas_schedule *schedule, const char *path);

double gas_schedule_fitness(const gas_schedule *schedule);
int32_t gas_schedule_assigned_count(const gas_schedule *schedule);

/* Hard-constraint audit: time conflicts and unit overruns. Writes a
 * one-line-per-problem report and the problem count; GAS_OK even when
 * problems exist (the count carries the verdict). */
gas_status gas_schedule_check(const gas_schedule *schedule, char **report, int32_t *problems);

/* ------------------------------------------------------------------ */
/* Post-optimization suggestions                                       */
/* ------------------------------------------------------------------ */

gas_status gas_schedule_suggest(const gas_schedule *schedule, gas_suggestions **out);
void gas_suggestions_free(gas_suggestions *suggestions);

int32_t gas_suggestions_count(const gas_suggestions *suggestions);

/* Paper-style listing of suggestion `index` (rationale line plus the
 * involved class lines). Owned by the handle; do not free. NULL when the
 * index is out of range. */
const char *gas_suggestions_text(const gas_suggestions *suggestions, int32_t index);

/* Applies suggestion `index` to the schedule the suggestions were computed
 * from and returns the revised schedule. GAS_ERROR_STALE when the base
 * schedule no longer matches. */
gas_status gas_suggestions_apply(const gas_suggestions *suggestions, int32_t index,
                                 gas_schedule **out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GASCHED_H */

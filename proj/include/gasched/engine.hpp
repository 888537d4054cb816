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

#ifndef GASCHED_ENGINE_HPP
#define GASCHED_ENGINE_HPP

#include <cstdint>
#include <vector>

#include "gasched/chromosome.hpp"
#include "gasched/domain.hpp"
#include "gasched/fitness.hpp"
#include "gasched/rng.hpp"

namespace gasched {

// Generational GA. One SplitMix64 stream seeded from `seed` supplies every
// draw in a fixed order: first the initial population bits (chromosome by
// chromosome), then per reproduction step parent A, parent B, the crossover
// decision, and for crossed pairs the crossover point followed by the
// mutation gaps of both children. Pairs that skip crossover are carried
// into the next generation verbatim; that retention is what lets
// discoveries survive whole-generation replacement. Fitness evaluation
// draws nothing, so fanning it out over workers cannot change the result.

struct GAConfig {
  int population_size = 100;
  double crossover_prob = 0.25;
  double mutation_prob = 0.01;
  int max_generations = 400;
  int stagnation_limit = 400;   // generations without a new global best before stopping
  std::uint64_t seed = 1;
  bool enforce_associations = true;
  DecodePolicy decode_policy = DecodePolicy::Modulo;
  // Pairing slots per chromosome relative to the class count. The reference
  // 2,000-bit layout already carried more class slots (200) than classes
  // (155); the surplus is what lets the search approach full coverage while
  // duplicate slots decay into no-ops. 2.6 is where convergence quality
  // peaks under the default population/crossover/mutation settings.
  double class_slot_factor = 2.6;
  int workers = 1;              // parallel fitness evaluation; never affects results
};

struct GenerationStats {
  int generation = 0;
  double min_fitness = 0.0;
  double mean_fitness = 0.0;
  double max_fitness = 0.0;
  int assigned_count = 0;       // classes assigned in this generation's best schedule
  bool new_global_best = false;
};

struct EvaluatedChromosome {
  Chromosome chromosome;
  double fitness = 0.0;
  int assigned_count = 0;
};

struct RunResult {
  Chromosome best_chromosome;
  Schedule best_schedule;
  FitnessBreakdown best_breakdown;
  FitnessBreakdown initial_breakdown;  // generation 0's best, for the paired reports
  std::vector<GenerationStats> history;
  int generations_run = 0;
};

/// Decode, build and score every chromosome; result sorted ascending by
/// fitness (stable, so ties keep their population order).
std::vector<EvaluatedChromosome> evaluate_population(std::vector<Chromosome> population,
                                                     const Instance& inst,
                                                     const GAConfig& cfg);

/// Fitness-inverse roulette over an ascending fitness list: with
/// f_max = max fitness and weights f_max - g_i, returns the minimal k whose
/// cumulative weight strictly exceeds r * total. All-equal fitness lists
/// fall back to a uniform pick.
int roulette_select(const std::vector<double>& sorted_fitnesses, SplitMix64& rng);

/// Breed a full replacement generation from an evaluated, sorted
/// population: roulette-select a pair, cross it with probability
/// crossover_prob (mutating both offspring), otherwise pass the parents
/// through untouched.
std::vector<Chromosome> next_generation(const std::vector<EvaluatedChromosome>& sorted,
                                        const GAConfig& cfg, SplitMix64& rng);

/// Full run: random initial population, then evolve up to max_generations,
/// greedily holding the best chromosome ever seen. Stops early after
/// stagnation_limit generations without a new global best.
RunResult run(const Instance& inst, const GAConfig& cfg);

}  // namespace gasched

#endif  // GASCHED_ENGINE_HPP

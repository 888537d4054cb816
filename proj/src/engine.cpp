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

#include "gasched/engine.hpp"

#include <algorithm>
#include <thread>

namespace gasched {

namespace {

void check_config(const GAConfig& cfg) {
  if (cfg.population_size < 2 || cfg.population_size % 2 != 0) {
    throw Error("population size must be even and at least 2");
  }
  if (cfg.crossover_prob < 0.0 || cfg.crossover_prob > 1.0 || cfg.mutation_prob < 0.0 ||
      cfg.mutation_prob > 1.0) {
    throw Error("probabilities must lie in [0,1]");
  }
  if (cfg.max_generations < 0) {
    throw Error("max generations must be non-negative");
  }
  if (cfg.stagnation_limit < 1) {
    throw Error("stagnation limit must be at least 1");
  }
  if (cfg.class_slot_factor < 1.0) {
    throw Error("class slot factor must be at least 1");
  }
  if (cfg.workers < 1) {
    throw Error("worker count must be at least 1");
  }
}

struct ScoredIndex {
  double fitness;
  int assigned;
};

ScoredIndex score(const Chromosome& c, const ChromosomeLayout& layout, const Instance& inst,
                  const GAConfig& cfg) {
  auto pairings = decode_pairings(c, layout, inst.professor_count(), inst.section_count(),
                                  cfg.decode_policy);
  Schedule s = build_schedule(pairings, inst, cfg.enforce_associations);
  return {global_fitness_value(s, inst), s.assigned_count()};
}

}  // namespace

std::vector<EvaluatedChromosome> evaluate_population(std::vector<Chromosome> population,
                                                     const Instance& inst,
                                                     const GAConfig& cfg) {
  const int n = static_cast<int>(population.size());
  std::vector<ScoredIndex> scores(n);
  const ChromosomeLayout layout =
      ChromosomeLayout::for_instance(inst, cfg.class_slot_factor);

  int workers = std::min(cfg.workers, n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) scores[i] = score(population[i], layout, inst, cfg);
  } else {
    // Results land by index, so the partition cannot influence the outcome.
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (int i = w; i < n; i += workers) {
          scores[i] = score(population[i], layout, inst, cfg);
        }
      });
    }
    for (auto& t : threads) t.join();
  }

  std::vector<EvaluatedChromosome> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back({std::move(population[i]), scores[i].fitness, scores[i].assigned});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const EvaluatedChromosome& a, const EvaluatedChromosome& b) {
                     return a.fitness < b.fitness;
                   });
  return out;
}

int roulette_select(const std::vector<double>& sorted_fitnesses, SplitMix64& rng) {
  if (sorted_fitnesses.empty()) {
    throw Error("roulette selection over an empty population");
  }
  const int n = static_cast<int>(sorted_fitnesses.size());
  const double f_max = sorted_fitnesses.back();
  double total = 0.0;
  for (double g : sorted_fitnesses) total += f_max - g;
  if (total <= 0.0) {
    return static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
  }
  const double threshold = rng.next_double() * total;
  double cumulative = 0.0;
  for (int k = 0; k < n; ++k) {
    cumulative += f_max - sorted_fitnesses[k];
    if (cumulative > threshold) return k;
  }
  return n - 1;
}

std::vector<Chromosome> next_generation(const std::vector<EvaluatedChromosome>& sorted,
                                        const GAConfig& cfg, SplitMix64& rng) {
  std::vector<double> fitnesses;
  fitnesses.reserve(sorted.size());
  for (const EvaluatedChromosome& e : sorted) fitnesses.push_back(e.fitness);

  std::vector<Chromosome> next;
  next.reserve(cfg.population_size);
  while (static_cast<int>(next.size()) < cfg.population_size) {
    const Chromosome& a = sorted[roulette_select(fitnesses, rng)].chromosome;
    const Chromosome& b = sorted[roulette_select(fitnesses, rng)].chromosome;
    Chromosome c1, c2;
    if (rng.next_double() < cfg.crossover_prob) {
      int point = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(a.size())));
      std::tie(c1, c2) = crossover_at(a, b, point);
      mutate_in_place(c1, cfg.mutation_prob, rng);
      mutate_in_place(c2, cfg.mutation_prob, rng);
    } else {
      c1 = a;
      c2 = b;
    }
    next.push_back(std::move(c1));
    next.push_back(std::move(c2));
  }
  return next;
}

RunResult run(const Instance& inst, const GAConfig& cfg) {
  check_config(cfg);
  auto violations = validate_instance(inst);
  if (has_errors(violations)) {
    throw ValidationError("instance is invalid:\n" + format_violations(violations));
  }
  if (inst.professor_count() == 0 || inst.section_count() == 0) {
    throw ValidationError("instance needs at least one professor and one section");
  }

  SplitMix64 rng(cfg.seed);
  const ChromosomeLayout layout =
      ChromosomeLayout::for_instance(inst, cfg.class_slot_factor);
  const int length = layout.length();

  std::vector<Chromosome> population;
  population.reserve(cfg.population_size);
  for (int i = 0; i < cfg.population_size; ++i) {
    population.push_back(random_chromosome(rng, length));
  }

  auto evaluated = evaluate_population(std::move(population), inst, cfg);

  auto stats_for = [](const std::vector<EvaluatedChromosome>& gen, int index,
                      bool new_best) {
    double sum = 0.0;
    for (const EvaluatedChromosome& e : gen) sum += e.fitness;
    return GenerationStats{index, gen.front().fitness, sum / static_cast<double>(gen.size()),
                           gen.back().fitness, gen.front().assigned_count, new_best};
  };

  RunResult result;
  Chromosome best = evaluated.front().chromosome;
  double best_fitness = evaluated.front().fitness;
  const Chromosome initial_best = best;
  result.history.push_back(stats_for(evaluated, 0, true));

  int stagnant = 0;
  for (int g = 1; g <= cfg.max_generations; ++g) {
    auto offspring = next_generation(evaluated, cfg, rng);
    evaluated = evaluate_population(std::move(offspring), inst, cfg);
    bool new_best = evaluated.front().fitness < best_fitness;
    if (new_best) {
      best = evaluated.front().chromosome;
      best_fitness = evaluated.front().fitness;
      stagnant = 0;
    } else {
      ++stagnant;
    }
    result.history.push_back(stats_for(evaluated, g, new_best));
    if (stagnant >= cfg.stagnation_limit) break;
  }
  result.generations_run = static_cast<int>(result.history.size()) - 1;

  auto rebuild = [&](const Chromosome& c) {
    auto pairings = decode_pairings(c, layout, inst.professor_count(),
                                    inst.section_count(), cfg.decode_policy);
    return build_schedule(pairings, inst, cfg.enforce_associations);
  };
  result.best_schedule = rebuild(best);
  result.best_breakdown = global_fitness(result.best_schedule, inst);
  result.initial_breakdown = global_fitness(rebuild(initial_best), inst);
  result.best_chromosome = std::move(best);
  return result;
}

}  // namespace gasched

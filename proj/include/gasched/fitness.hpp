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

#ifndef GASCHED_FITNESS_HPP
#define GASCHED_FITNESS_HPP

#include <string>
#include <vector>

#include "gasched/domain.hpp"

namespace gasched {

// Local fitness of a professor's schedule: seven penalty components, all
// pure functions of (schedule, instance). Two departmental terms count raw
// units / broken-association members; the five faculty terms are a
// satisfaction ratio in [0,1] scaled by that professor's survey weight.
// A perfect schedule scores 0 and the solver minimizes the global sum.

struct ComponentBreakdown {
  double d_units = 0.0;
  double d_assoc = 0.0;
  double d_8am = 0.0;
  double d_half = 0.0;
  double d_fav = 0.0;
  double d_gap = 0.0;
  double d_prep = 0.0;
  double f_p = 0.0;
};

struct FitnessBreakdown {
  std::vector<ComponentBreakdown> per_professor;  // indexed like Instance::professors()
  double global_f = 0.0;
};

/// Raw quantities the components are computed from; explain() reports them.
struct ScheduleMeasures {
  int mandated_units = 0;
  int assigned_units = 0;
  int missing_assoc_members = 0;   // summed over partially-held groups
  int eight_am_days = 0;           // weekdays with a class starting 08:00
  double nonpreferred_hours = 0.0; // weekly hours in the non-preferred half
  double total_hours = 0.0;        // weekly teaching hours
  int nonfavorite_courses = 0;     // distinct assigned non-major courses not favored
  int favorite_count = 0;
  double gap_hours = 0.0;          // weekly idle hours between classes
  int distinct_courses = 0;
};

ScheduleMeasures measure_professor(const Schedule& s, const Instance& inst, int professor);

int delta_units(const Schedule& s, const Instance& inst, int professor);
int delta_assoc(const Schedule& s, const Instance& inst, int professor);
double delta_8am(const Schedule& s, const Instance& inst, int professor);
double delta_half(const Schedule& s, const Instance& inst, int professor);
double delta_fav(const Schedule& s, const Instance& inst, int professor);
double delta_gap(const Schedule& s, const Instance& inst, int professor);
double delta_prep(const Schedule& s, const Instance& inst, int professor);

double local_fitness(const Schedule& s, const Instance& inst, int professor);

/// Full per-professor breakdown; global_f accumulates f_p in professor
/// index order, so it is bit-identical run to run.
FitnessBreakdown global_fitness(const Schedule& s, const Instance& inst);

/// Sum only; the evaluation hot path uses this to skip the per-professor
/// vector.
double global_fitness_value(const Schedule& s, const Instance& inst);

/// Exactly seven lines, one per component, each naming the component, the
/// raw measure, the weight and the resulting delta. Zero-weight components
/// read "weight 0, no contribution". Summing the printed delta values
/// reproduces f_p exactly.
std::vector<std::string> explain(const Schedule& s, const Instance& inst, int professor);

}  // namespace gasched

#endif  // GASCHED_FITNESS_HPP

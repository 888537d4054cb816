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

#ifndef GASCHED_IO_HPP
#define GASCHED_IO_HPP

#include <string>
#include <vector>

#include "gasched/domain.hpp"
#include "gasched/engine.hpp"

namespace gasched {

// File formats are CSV (comma-delimited, header row, UTF-8, LF endings) plus
// the Prolog facts dump and the per-professor explanation text. Column sets
// are fixed: unknown or missing columns are parse errors, never ignored.
// Full schemas live in docs/formats.md. All writers are byte-deterministic.

struct InstanceFiles {
  std::string professors;
  std::string sections;
  std::string associations;
  std::string preferences;
  std::string preassignments;

  /// The conventional file names under one directory.
  static InstanceFiles in_dir(const std::string& dir);
};

/// Parse, cross-link and validate. Throws ParseError (with file, line and
/// column) on malformed input and ValidationError listing every violation
/// when the data breaks an invariant. Warnings, when requested, never fail
/// the load.
Instance load_instance(const InstanceFiles& files, std::vector<Violation>* warnings = nullptr);

/// The five instance CSVs under `dir`, conventional names.
void write_instance_files(const Instance& inst, const std::string& dir);

/// One row per section: assigned rows sorted by professor then course and
/// section, unassigned rows (empty professor field) after them.
void write_schedule(const Schedule& s, const Instance& inst, const std::string& path);

/// Inverse of write_schedule against the same instance. A room differing
/// from the instance's section room becomes a room override.
Schedule load_schedule(const Instance& inst, const std::string& path);

/// Prolog facts, one `class(prof,course-sec,days,[h,m,h,m],room).` line per
/// assigned section, sorted by professor then course/section.
void write_prolog_facts(const Schedule& s, const Instance& inst, const std::string& path);

/// <prefix>_generations.csv (per-generation fitness statistics) and
/// <prefix>_professors.csv (per-professor breakdowns of the generation-0
/// best and the final best).
void write_run_report(const RunResult& result, const Instance& inst,
                      const std::string& path_prefix);

/// Per professor: a header line plus the seven explanation lines.
void write_explanations(const Schedule& s, const Instance& inst, const std::string& path);

}  // namespace gasched

#endif  // GASCHED_IO_HPP

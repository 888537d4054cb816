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

#include "gasched/chromosome.hpp"

#include <algorithm>
#include <cmath>

namespace gasched {

namespace {

int chunk_value(const Chromosome& c, int chunk) {
  int v = 0;
  int base = chunk * 8;
  for (int b = 0; b < 8; ++b) {
    v = (v << 1) | c.bits[base + b];
  }
  return v;
}

}  // namespace

ChromosomeLayout ChromosomeLayout::for_instance(const Instance& inst,
                                                double class_slot_factor) {
  if (class_slot_factor < 1.0) {
    throw Error("class slot factor must be at least 1");
  }
  ChromosomeLayout layout;
  // One professor slot per pairing. With shared professor slots a single
  // mutated slot rewires several pairings at once, which measurably caps
  // the assignment coverage the search can reach.
  layout.class_slots =
      static_cast<int>(std::ceil(inst.section_count() * class_slot_factor));
  layout.professor_slots = layout.class_slots;
  return layout;
}

int chromosome_length_for(const Instance& inst) {
  return 8 * (inst.professor_count() + inst.section_count());
}

Chromosome random_chromosome(SplitMix64& rng, int length) {
  if (length <= 0 || length % 8 != 0) {
    throw Error("chromosome length must be a positive multiple of 8, got " +
                std::to_string(length));
  }
  Chromosome c;
  c.bits.resize(length);
  for (int i = 0; i < length; ++i) {
    c.bits[i] = static_cast<std::uint8_t>(rng.next_u64() & 1u);
  }
  return c;
}

std::vector<Pairing> decode_pairings(const Chromosome& c, const ChromosomeLayout& layout,
                                     int n_prof, int n_class, DecodePolicy policy) {
  if (n_prof <= 0 || n_class <= 0) {
    throw Error("decode requires positive professor and class counts");
  }
  if (layout.professor_slots <= 0 || layout.class_slots <= 0 ||
      c.size() != layout.length()) {
    throw Error("chromosome length " + std::to_string(c.size()) + " does not match 8*(" +
                std::to_string(layout.professor_slots) + "+" +
                std::to_string(layout.class_slots) + ")");
  }
  std::vector<Pairing> out;
  out.reserve(layout.class_slots);
  for (int i = 0; i < layout.class_slots; ++i) {
    int prof = chunk_value(c, i % layout.professor_slots);
    int cls = chunk_value(c, layout.professor_slots + i);
    if (policy == DecodePolicy::Modulo) {
      prof %= n_prof;
      cls %= n_class;
    } else if (prof >= n_prof || cls >= n_class) {
      continue;
    }
    out.push_back({prof, cls});
  }
  return out;
}

std::vector<Pairing> decode_pairings(const Chromosome& c, int n_prof, int n_class,
                                     DecodePolicy policy) {
  return decode_pairings(c, ChromosomeLayout{n_prof, n_class}, n_prof, n_class, policy);
}

namespace {

/// Builder state with the running unit loads so the three checks are O(held).
class GreedyBuilder {
 public:
  explicit GreedyBuilder(const Instance& inst)
      : inst_(inst),
        schedule_(inst.professor_count(), inst.section_count()),
        load_(inst.professor_count(), 0) {
    for (const ResolvedPreAssignment& pa : inst.resolved_pre_assignments()) {
      place(pa.professor, pa.section);
    }
  }

  bool fits(int prof, int section) const {
    if (schedule_.owner_of(section) >= 0) return false;  // check 1: already assigned
    const Section& sec = inst_.sections()[section];
    if (load_[prof] + sec.units > inst_.professors()[prof].mandated_units) {
      return false;  // check 2: units
    }
    for (std::int32_t held : schedule_.sections_of(prof)) {
      if (overlaps(sec.meeting, inst_.sections()[held].meeting)) {
        return false;  // check 3: time conflict
      }
    }
    return true;
  }

  void place(int prof, int section) {
    schedule_.assign(prof, section);
    load_[prof] += inst_.sections()[section].units;
  }

  /// All-or-nothing: place members one by one, roll back on the first
  /// member that fails a check.
  bool try_group(int prof, const std::vector<std::int32_t>& members) {
    std::size_t placed = 0;
    for (; placed < members.size(); ++placed) {
      if (!fits(prof, members[placed])) break;
      place(prof, members[placed]);
    }
    if (placed == members.size()) return true;
    for (std::size_t i = 0; i < placed; ++i) {
      schedule_.unassign(members[i]);
      load_[prof] -= inst_.sections()[members[i]].units;
    }
    return false;
  }

  Schedule take() { return std::move(schedule_); }

 private:
  const Instance& inst_;
  Schedule schedule_;
  std::vector<int> load_;
};

}  // namespace

Schedule build_schedule(const std::vector<Pairing>& pairings, const Instance& inst,
                        bool enforce_associations) {
  GreedyBuilder builder(inst);
  for (const Pairing& p : pairings) {
    if (!inst.professors()[p.professor].ga_eligible) continue;
    int group = enforce_associations ? inst.group_of(p.cls) : -1;
    if (group >= 0) {
      builder.try_group(p.professor, inst.group_members(group));
    } else if (builder.fits(p.professor, p.cls)) {
      builder.place(p.professor, p.cls);
    }
  }
  return builder.take();
}

std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b,
                                               int point) {
  if (a.size() != b.size()) {
    throw Error("crossover requires equal chromosome lengths");
  }
  if (point < 0 || point >= a.size()) {
    throw Error("crossover point out of range");
  }
  Chromosome c = a, d = b;
  std::swap_ranges(c.bits.begin() + point, c.bits.end(), d.bits.begin() + point);
  return {std::move(c), std::move(d)};
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                            SplitMix64& rng) {
  if (a.size() != b.size()) {
    throw Error("crossover requires equal chromosome lengths");
  }
  int point = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(a.size())));
  return crossover_at(a, b, point);
}

void mutate_in_place(Chromosome& c, double rate, SplitMix64& rng) {
  if (rate < 0.0 || rate > 1.0) {
    throw Error("mutation rate must lie in [0,1]");
  }
  if (rate == 0.0 || c.size() == 0) return;
  if (rate == 1.0) {
    for (auto& bit : c.bits) bit ^= 1u;
    return;
  }
  // Geometric gap sampling: identical in distribution to flipping each bit
  // independently with probability `rate`, with one draw per flip instead
  // of one per bit.
  const double denom = std::log1p(-rate);
  const int n = c.size();
  std::int64_t pos = 0;
  while (pos < n) {
    double u = 1.0 - rng.next_double();  // (0, 1]
    std::int64_t gap = static_cast<std::int64_t>(std::log(u) / denom);
    pos += gap;
    if (pos >= n) break;
    c.bits[pos] ^= 1u;
    ++pos;
  }
}

Chromosome mutate(const Chromosome& c, double rate, SplitMix64& rng) {
  Chromosome out = c;
  mutate_in_place(out, rate, rng);
  return out;
}

}  // namespace gasched

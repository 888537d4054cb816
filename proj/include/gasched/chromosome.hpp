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

#ifndef GASCHED_CHROMOSOME_HPP
#define GASCHED_CHROMOSOME_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gasched/domain.hpp"
#include "gasched/rng.hpp"

namespace gasched {

// Bit-string encoding of proposed professor<->class pairings. The string is
// two concatenated parts of 8-bit chunks: professor slots, then class
// slots. Class slot i pairs with professor slot (i mod professor_slots), so
// every class slot yields a pairing; each chunk is read most-significant-bit
// first. Class slots may outnumber the classes (the reference 2,000-bit
// layout carries 200 class slots against 155 classes); the surplus gives the
// search room to keep duplicates without sacrificing coverage.

struct Chromosome {
  std::vector<std::uint8_t> bits;  // one element per bit, value 0 or 1

  int size() const { return static_cast<int>(bits.size()); }
  bool operator==(const Chromosome&) const = default;
};

struct Pairing {
  std::int32_t professor = 0;
  std::int32_t cls = 0;

  bool operator==(const Pairing&) const = default;
};

/// What to do with a chunk whose byte value exceeds the entity count:
/// reduce it modulo the count, or drop the pairing.
enum class DecodePolicy { Modulo, Skip };

/// Slot counts of a run's chromosomes: one 8-bit chunk per slot.
struct ChromosomeLayout {
  int professor_slots = 0;
  int class_slots = 0;

  int length() const { return 8 * (professor_slots + class_slots); }
  bool operator==(const ChromosomeLayout&) const = default;

  /// The solver's run layout: ceil(class_slot_factor * classes) class slots
  /// (factor >= 1) and a professor slot for each of them, so every pairing
  /// mutates independently.
  static ChromosomeLayout for_instance(const Instance& inst, double class_slot_factor = 1.0);
};

/// 8 * (professors + sections): one slot per entity, no surplus.
int chromosome_length_for(const Instance& inst);

/// Uniformly random bits; bit i is the low bit of the i-th generator draw.
Chromosome random_chromosome(SplitMix64& rng, int length);

std::vector<Pairing> decode_pairings(const Chromosome& c, const ChromosomeLayout& layout,
                                     int n_prof, int n_class,
                                     DecodePolicy policy = DecodePolicy::Modulo);

/// Entity-count slots (no surplus).
std::vector<Pairing> decode_pairings(const Chromosome& c, int n_prof, int n_class,
                                     DecodePolicy policy = DecodePolicy::Modulo);

/// Greedy left-to-right application of the pairings on top of the
/// instance's pre-assignments. A pairing is silently rejected when the
/// class is already assigned, the professor would exceed their mandated
/// units, the class clashes in time with one they already hold, or the
/// professor is not GA-eligible. With enforce_associations the whole
/// lecture+labs group is taken or rejected as one unit. The result always
/// satisfies the hard constraints.
Schedule build_schedule(const std::vector<Pairing>& pairings, const Instance& inst,
                        bool enforce_associations);

/// Single-point crossover: bits [point, L) swap between the pair.
std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b,
                                               int point);
std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                            SplitMix64& rng);

/// Independent per-bit flips with the given probability; input untouched.
Chromosome mutate(const Chromosome& c, double rate, SplitMix64& rng);
void mutate_in_place(Chromosome& c, double rate, SplitMix64& rng);

}  // namespace gasched

#endif  // GASCHED_CHROMOSOME_HPP

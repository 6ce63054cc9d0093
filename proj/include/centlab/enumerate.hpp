#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "centlab/ring.hpp"

namespace centlab {

// Which additive types may be enumerated exhaustively.
//
// Default: every type of order <= 8, plus the types of order 9 and 16 with
// at most two generators. An override (CENTLAB_ENUM_CEILING=N, N <= 16)
// replaces this with "every type of order <= N".
struct EnumCeiling {
  std::optional<std::uint32_t> max_order;  // empty = default policy

  bool allows(Invariants const& invariants) const;
  std::string describe() const;
};

// Reads CENTLAB_ENUM_CEILING. Throws BadParameter on a malformed value.
EnumCeiling enum_ceiling_from_env();

// One unit of enumeration work: all rings on `invariants` whose table starts
// with `prefix` (row-major). Disjoint prefixes of equal length partition the
// search space, and concatenating their outputs in prefix order reproduces
// the single-task output.
struct EnumTask {
  Invariants invariants;
  std::vector<Element> prefix;
};

// Splits the search on `invariants` into at least `min_tasks` tasks when
// possible, skipping prefixes that already fail a pruning test.
std::vector<EnumTask> partition_tasks(Invariants const& invariants,
                                      std::size_t min_tasks);

// Canonical rings of one task, in lexicographic table order. Unlabelled.
std::vector<FiniteRing> run_task(EnumTask const& task);

// One canonical representative per isomorphism class of rings with the
// given additive group, in lexicographic table order, labelled
// "o<order>-<d1>x<d2>...-<seq>". Output does not depend on `workers`.
// Throws CeilingExceeded when the ceiling forbids the type.
std::vector<FiniteRing> enumerate_rings(Invariants const& invariants,
                                        unsigned workers = 1,
                                        EnumCeiling const& ceiling = {});

// All additive types of the given order allowed by the ceiling, in
// abelian_groups_of_order order. Types outside the ceiling are reported in
// `skipped` (when non-null); throws CeilingExceeded if none is allowed.
std::vector<FiniteRing> enumerate_order(std::uint32_t order, unsigned workers = 1,
                                        EnumCeiling const& ceiling = {},
                                        std::vector<Invariants>* skipped = nullptr);

}  // namespace centlab

#pragma once

#include <cstdint>
#include <vector>

#include "centlab/ring.hpp"

namespace centlab {

// Automorphism scans are exhaustive only up to this order.
inline constexpr std::uint32_t kCanonicalMaxOrder = 16;

struct Automorphism {
  std::vector<Element> map;      // x -> phi(x)
  std::vector<Element> inverse;  // phi(x) -> x
};

// All automorphisms of the additive group, identity first. Throws
// OrderTooLarge above kCanonicalMaxOrder.
std::vector<Automorphism> additive_automorphisms(AdditiveGroup const& group);

// Table of the ring transported along phi: entry (i, j) is
// phi^-1(phi(e_i) * phi(e_j)).
std::vector<Element> transport_table(FiniteRing const& ring, Automorphism const& phi);

// Representative whose flattened table is lexicographically minimal over
// all additive automorphisms. Idempotent. Keeps the label.
FiniteRing canonicalize(FiniteRing const& ring);

enum class Isomorphism { No, Yes, Unknown };

// Exact for orders <= kCanonicalMaxOrder. Above that, answers No when a
// cheap invariant differs (order, additive type, commutativity, |Z|,
// centralizer-size multiset, n) and Unknown otherwise.
Isomorphism is_isomorphic(FiniteRing const& a, FiniteRing const& b);

}  // namespace centlab

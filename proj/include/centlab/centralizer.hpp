#pragma once

#include <cstdint>
#include <vector>

#include "centlab/element_set.hpp"
#include "centlab/ring.hpp"

namespace centlab {

// Symmetric commutation relation of a ring as one bit row per element:
// row(x) is exactly the centralizer C(x).
class CommutationTable {
 public:
  explicit CommutationTable(FiniteRing const& ring);

  std::uint32_t order() const noexcept { return order_; }
  bool commute(Element x, Element y) const noexcept {
    return (rows_[std::size_t{x} * words_ + (y >> 6)] >> (y & 63)) & 1u;
  }
  std::span<std::uint64_t const> row(Element x) const noexcept {
    return {rows_.data() + std::size_t{x} * words_, words_};
  }
  ElementSet centralizer(Element x) const;

 private:
  std::uint32_t order_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

// The distinct centralizers of a ring. centralizers()[0] is always R itself
// and assignment()[x] is the position of C(x).
class CentStructure {
 public:
  CentStructure(std::vector<ElementSet> centralizers,
                std::vector<std::uint32_t> assignment);

  std::size_t n() const noexcept { return centralizers_.size(); }
  std::vector<ElementSet> const& centralizers() const noexcept {
    return centralizers_;
  }
  std::vector<std::uint32_t> const& assignment() const noexcept {
    return assignment_;
  }
  ElementSet const& of(Element x) const { return centralizers_[assignment_[x]]; }
  // Smallest element whose centralizer is centralizers()[pos].
  Element representative(std::size_t pos) const { return reps_[pos]; }

 private:
  std::vector<ElementSet> centralizers_;
  std::vector<std::uint32_t> assignment_;
  std::vector<Element> reps_;
};

ElementSet center(FiniteRing const& ring);
ElementSet center(CommutationTable const& table);

ElementSet centralizer(FiniteRing const& ring, Element x);

// {y in T : xy = yx}. Throws NotMember if x is not in T.
ElementSet centralizer_in(FiniteRing const& ring, ElementSet const& subring,
                          Element x);

CentStructure cent_structure(FiniteRing const& ring);
CentStructure cent_structure(CommutationTable const& table);

// Returns `set` flagged as a subgroup, verifying closure under addition and
// negation when it is not already flagged. Throws NotSubgroup.
ElementSet require_subgroup(FiniteRing const& ring, ElementSet const& set);

// |R : S| for an additive subgroup S.
std::uint32_t additive_index(FiniteRing const& ring, ElementSet const& subgroup);

// Invariant factors of the additive quotient R/S. Built by repeatedly
// splitting off a cyclic subgroup of maximal order in the current quotient.
Invariants quotient_invariants(FiniteRing const& ring, ElementSet const& subgroup);

bool is_quotient_cyclic(FiniteRing const& ring, ElementSet const& subgroup);

// True iff every pair in `set` commutes.
bool is_commutative_subset(FiniteRing const& ring, ElementSet const& set);

}  // namespace centlab

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "centlab/centralizer.hpp"
#include "centlab/ring.hpp"

namespace centlab {

// Vertices are the non-central elements (ascending); x ~ y iff xy != yx.
class NoncommGraph {
 public:
  explicit NoncommGraph(CommutationTable const& table);
  explicit NoncommGraph(FiniteRing const& ring) : NoncommGraph(CommutationTable(ring)) {}

  std::size_t size() const noexcept { return vertices_.size(); }
  std::vector<Element> const& vertices() const noexcept { return vertices_; }
  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return (adj_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::span<std::uint64_t const> neighbours(std::size_t u) const noexcept {
    return {adj_.data() + u * words_, words_};
  }
  std::size_t words() const noexcept { return words_; }
  std::size_t edge_count() const noexcept;

 private:
  std::vector<Element> vertices_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
};

NoncommGraph noncommuting_graph(FiniteRing const& ring);

// Maximum pairwise non-commuting set. For commutative rings t = 1 with
// witness {0}. The witness is the lexicographically smallest maximum clique.
struct CliqueResult {
  std::size_t t = 1;
  std::vector<Element> witness{0};
};

CliqueResult max_noncommuting_set(FiniteRing const& ring);
CliqueResult max_noncommuting_set(NoncommGraph const& graph);

struct BoundCheck {
  bool applicable = false;
  bool holds = true;
  std::uint64_t value = 0;
  std::uint64_t bound = 0;
  std::string rule;
};

// One instance of "G = M u H_1 u ... u H_k with M proper implies
// beta_1 <= k", with M a chosen proper subgroup and the H's the remaining
// cover members. The equality clause (beta_1 = k forces all beta_i = k and
// H_i n H_j <= M) is checked whenever beta_1 = k occurs.
struct CoverLemmaCheck {
  std::string subgroup;  // "Z" or "C(<element>)"
  std::size_t k = 0;
  std::uint32_t beta1 = 0;
  bool holds = true;
  bool equality_case = false;
  bool equality_holds = true;
};

struct CoverReport {
  std::size_t members = 0;
  bool covers = false;
  bool intersection_is_center = false;
  bool irredundant = false;
  std::vector<std::uint32_t> betas;  // sorted |R : C(r_i)|
  std::uint32_t d_index = 1;         // |R : D|, D = intersection of the C(r_i)
  BoundCheck alpha2;                 // alpha_2 <= m - 1
  BoundCheck index_bound;            // factorial bound on |R : D|
  std::vector<CoverLemmaCheck> lemma_checks;

  bool bounds_hold() const;
};

// Throws NotPairwiseNoncommuting with the offending positions.
CoverReport cover_report(FiniteRing const& ring, std::span<Element const> set);
CoverReport cover_report(FiniteRing const& ring, CommutationTable const& table,
                         std::span<Element const> set);

// "C(r) = C(s) or C(r) n C(s) = Z" for every pair of non-central r, s.
struct PairwiseResult {
  bool holds = true;
  std::optional<std::pair<Element, Element>> counterexample;
};

PairwiseResult pairwise_intersection_is_center(FiniteRing const& ring);
PairwiseResult pairwise_intersection_is_center(CentStructure const& cent,
                                               ElementSet const& center);

struct ProperCommutativityResult {
  bool holds = true;
  std::optional<Element> centralizer_of;                    // C(x) is non-commutative
  std::optional<std::pair<Element, Element>> noncommuting;  // inside C(x)
};

ProperCommutativityResult all_proper_centralizers_commutative(FiniteRing const& ring);
ProperCommutativityResult all_proper_centralizers_commutative(
    CommutationTable const& table, CentStructure const& cent);

// A proper non-commutative centralizer containing the centralizers of three
// distinct members of `set`, if one exists.
struct ContainingCentralizer {
  Element centralizer_of = 0;
  std::array<Element, 3> members{};
};

std::optional<ContainingCentralizer> find_noncommutative_container(
    CentStructure const& cent, std::span<Element const> set);

}  // namespace centlab

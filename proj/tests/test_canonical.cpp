#include <doctest.h>

#include <random>

#include "centlab/canonical.hpp"
#include "centlab/constructors.hpp"
#include "centlab/error.hpp"
#include "oracles.hpp"

using namespace centlab;

namespace {

// Additive automorphism count by checking every permutation of the
// elements for additivity.
std::size_t permutation_count(Invariants const& inv) {
  auto g = oracle::build(inv, std::vector<std::uint32_t>(inv.size() * inv.size(), 0));
  std::vector<std::uint32_t> p(g.order);
  for (std::uint32_t i = 0; i < g.order; ++i) p[i] = i;
  std::size_t c = 0;
  do {
    bool ok = true;
    for (std::uint32_t x = 0; x < g.order && ok; ++x)
      for (std::uint32_t y = 0; y < g.order && ok; ++y) ok = p[g.add(x, y)] == g.add(p[x], p[y]);
    c += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return c;
}

}  // namespace

TEST_CASE("automorphism counts match a permutation scan") {
  for (auto const& inv : {Invariants{2}, Invariants{4}, Invariants{2, 2}, Invariants{2, 4},
                          Invariants{8}, Invariants{2, 2, 2}, Invariants{3, 3}}) {
    CAPTURE(join_invariants(inv));
    auto auts = additive_automorphisms(AdditiveGroup(inv));
    CHECK(auts.size() == permutation_count(inv));
    REQUIRE_FALSE(auts.empty());
    for (Element x = 0; x < auts.front().map.size(); ++x) CHECK(auts.front().map[x] == x);
  }
}

TEST_CASE("automorphisms are additive bijections with correct inverses") {
  AdditiveGroup const g({2, 4});
  for (auto const& a : additive_automorphisms(g)) {
    for (Element x = 0; x < g.order(); ++x) {
      CHECK(a.inverse[a.map[x]] == x);
      for (Element y = 0; y < g.order(); ++y) CHECK(a.map[g.add(x, y)] == g.add(a.map[x], a.map[y]));
    }
  }
  CHECK_THROWS_AS(additive_automorphisms(AdditiveGroup({32})), Error);
}

TEST_CASE("transported tables are isomorphic copies with equal canonical form") {
  std::mt19937 rng(7);
  for (auto const& r : {top_row_ring(2), opposite_ring(top_row_ring(3)), upper_triangular_ring(2),
                        full_matrix_ring(2)}) {
    auto const auts = additive_automorphisms(r.group());
    auto const canon = canonicalize(r);
    CHECK(canonicalize(canon).same_table(canon));
    for (int trial = 0; trial < 5; ++trial) {
      auto const& phi = auts[rng() % auts.size()];
      auto moved = validate_ring(r.group(), transport_table(r, phi));
      CHECK(oracle::isomorphic(oracle::build(moved), oracle::build(r),
                               oracle::automorphisms(oracle::build(r))));
      CHECK(canonicalize(moved).same_table(canon));
      CHECK(is_isomorphic(moved, r) == Isomorphism::Yes);
    }
  }
}

TEST_CASE("canonical form is lexicographically minimal over the orbit") {
  auto const r = top_row_ring(3);
  auto const canon = canonicalize(r);
  for (auto const& phi : additive_automorphisms(r.group())) {
    auto t = transport_table(r, phi);
    CHECK_FALSE(std::lexicographical_compare(t.begin(), t.end(), canon.table().begin(),
                                             canon.table().end()));
  }
}

TEST_CASE("isomorphism distinguishes a ring from its opposite when they differ") {
  // E2 and its opposite are anti-isomorphic but not isomorphic.
  auto const e2 = top_row_ring(2);
  auto const op = opposite_ring(e2);
  bool const oracle_iso =
      oracle::isomorphic(oracle::build(e2), oracle::build(op), oracle::automorphisms(oracle::build(e2)));
  CHECK((is_isomorphic(e2, op) == Isomorphism::Yes) == oracle_iso);
  CHECK(is_isomorphic(e2, full_matrix_ring(2)) == Isomorphism::No);
  auto const big = full_matrix_ring(3);
  CHECK(is_isomorphic(big, big) == Isomorphism::Yes);
  CHECK(is_isomorphic(big, opposite_ring(big)) == Isomorphism::Unknown);
  CHECK(is_isomorphic(big, top_row_ring(7)) == Isomorphism::No);
}

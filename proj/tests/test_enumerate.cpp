#include <doctest.h>

#include <cstdlib>

#include "centlab/canonical.hpp"
#include "centlab/enumerate.hpp"
#include "centlab/error.hpp"
#include "oracles.hpp"

using namespace centlab;

namespace {

std::size_t noncommutative(std::vector<FiniteRing> const& rings) {
  std::size_t c = 0;
  for (auto const& r : rings) c += !r.is_commutative();
  return c;
}

void check_census(Invariants const& inv) {
  CAPTURE(join_invariants(inv));
  auto const rings = enumerate_rings(inv);
  auto const ref = oracle::census(inv);
  CHECK(rings.size() == ref.classes);
  CHECK(noncommutative(rings) == ref.noncommutative);
  // Pairwise non-isomorphic, each canonical.
  auto g = oracle::build(inv, std::vector<std::uint32_t>(inv.size() * inv.size(), 0));
  auto const auts = oracle::automorphisms(g);
  for (std::size_t i = 0; i < rings.size(); ++i) {
    CHECK(canonicalize(rings[i]).same_table(rings[i]));
    for (std::size_t j = 0; j < i; ++j) {
      CHECK_FALSE(oracle::isomorphic(oracle::build(rings[i]), oracle::build(rings[j]), auts));
    }
  }
}

}  // namespace

TEST_CASE("enumeration matches the unpruned census") {
  for (auto const& inv : {Invariants{}, Invariants{2}, Invariants{3}, Invariants{4},
                          Invariants{2, 2}, Invariants{6}, Invariants{8}, Invariants{2, 4},
                          Invariants{9}, Invariants{3, 3}}) {
    check_census(inv);
  }
}

TEST_CASE("labels are sequential per additive type") {
  auto const rings = enumerate_order(4);
  REQUIRE(rings.size() == 11);
  CHECK(rings.front().label() == "o4-4-0001");
  CHECK(rings.back().label() == "o4-2x2-0008");
  CHECK(enumerate_order(1).front().label() == "o1-1-0001");
}

TEST_CASE("workers and task splits do not change the output") {
  for (auto const& inv : {Invariants{2, 2, 2}, Invariants{4, 4}, Invariants{3, 3}}) {
    auto const one = enumerate_rings(inv, 1);
    auto const many = enumerate_rings(inv, 6);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(one[i].same_table(many[i]));
      CHECK(one[i].label() == many[i].label());
    }
    std::vector<FiniteRing> joined;
    for (auto const& task : partition_tasks(inv, 10)) {
      for (auto& r : run_task(task)) joined.push_back(std::move(r));
    }
    REQUIRE(joined.size() == one.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(joined[i].same_table(one[i]));
  }
}

TEST_CASE("ceiling policy") {
  EnumCeiling const def;
  CHECK(def.allows({2, 2, 2}));
  CHECK(def.allows({4, 4}));
  CHECK_FALSE(def.allows({2, 2, 4}));
  CHECK_FALSE(def.allows({2, 2, 2, 2}));
  CHECK_FALSE(def.allows({10}));
  CHECK_THROWS_AS(enumerate_rings({2, 2, 2, 2}), Error);
  std::vector<Invariants> skipped;
  auto const sixteen = enumerate_order(16, 1, def, &skipped);
  CHECK(skipped == std::vector<Invariants>{{2, 2, 4}, {2, 2, 2, 2}});
  CHECK(sixteen.size() == enumerate_rings({16}).size() + enumerate_rings({2, 8}).size() +
                              enumerate_rings({4, 4}).size());
  EnumCeiling const small{6};
  CHECK_FALSE(small.allows({8}));
  CHECK_THROWS_AS(enumerate_order(8, 1, small), Error);
}

TEST_CASE("ceiling override from the environment") {
  ::setenv("CENTLAB_ENUM_CEILING", "12", 1);
  auto c = enum_ceiling_from_env();
  CHECK(c.max_order == 12u);
  ::setenv("CENTLAB_ENUM_CEILING", "40", 1);
  CHECK_THROWS_AS(enum_ceiling_from_env(), Error);
  ::setenv("CENTLAB_ENUM_CEILING", "x", 1);
  CHECK_THROWS_AS(enum_ceiling_from_env(), Error);
  ::unsetenv("CENTLAB_ENUM_CEILING");
  CHECK_FALSE(enum_ceiling_from_env().max_order.has_value());
}

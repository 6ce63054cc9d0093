#include <doctest.h>

#include "centlab/abelian_group.hpp"
#include "centlab/error.hpp"

#include <numeric>

using namespace centlab;

namespace {

// Number of chains d1 | d2 | ... with every di >= 2 and product n.
std::size_t count_chains(std::uint32_t n, std::uint32_t min_step) {
  if (n == 1) return 1;
  std::size_t c = 0;
  for (std::uint32_t d = 2; d <= n; ++d) {
    if (n % d || d % min_step) continue;
    // d is the next factor; the remaining product must be divisible by
    // multiples of d, i.e. every later factor is a multiple of d.
    c += count_chains(n / d, d);
  }
  return c;
}

}  // namespace

TEST_CASE("encode and decode round-trip in mixed radix") {
  AdditiveGroup g({2, 6});
  CHECK(g.order() == 12);
  for (Element x = 0; x < g.order(); ++x) {
    auto c = g.decode(x);
    CHECK(c[0] == x % 2);
    CHECK(c[1] == x / 2);
    CHECK(g.encode(c) == x);
  }
  CHECK(g.generator(0) == 1);
  CHECK(g.generator(1) == 2);
}

TEST_CASE("group operations agree with coordinatewise arithmetic") {
  AdditiveGroup g({2, 4, 4});
  for (Element x = 0; x < g.order(); ++x) {
    auto cx = g.decode(x);
    CHECK(g.add(x, g.neg(x)) == 0);
    std::uint32_t ord = 1;
    for (std::size_t i = 0; i < cx.size(); ++i) {
      std::uint32_t o = 1;
      while (cx[i] * o % g.invariants()[i]) ++o;
      ord = std::lcm(ord, o);
    }
    CHECK(g.additive_order(x) == ord);
    for (Element y = 0; y < g.order(); y += 3) {
      auto cy = g.decode(y);
      auto s = g.decode(g.add(x, y));
      for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i] == (cx[i] + cy[i]) % g.invariants()[i]);
      }
    }
    CHECK(g.scale(x, 5) == g.add(g.add(g.add(g.add(x, x), x), x), x));
  }
}

TEST_CASE("invariant chains are validated") {
  CHECK(is_invariant_chain(Invariants{2, 4}));
  CHECK_FALSE(is_invariant_chain(Invariants{4, 2}));
  CHECK_FALSE(is_invariant_chain(Invariants{2, 3}));
  CHECK_FALSE(is_invariant_chain(Invariants{1, 2}));
  CHECK_THROWS_AS(AdditiveGroup(Invariants{3, 2}), Error);
  CHECK(AdditiveGroup().order() == 1);
}

TEST_CASE("normalizing moduli gives invariant factors") {
  CHECK(normalize_invariants(Invariants{2, 3}) == Invariants{6});
  CHECK(normalize_invariants(Invariants{4, 2}) == Invariants{2, 4});
  CHECK(normalize_invariants(Invariants{6, 4}) == Invariants{2, 12});
  CHECK(normalize_invariants(Invariants{1, 1}) == Invariants{});
}

TEST_CASE("abelian groups of order n match a chain count") {
  for (std::uint32_t n = 1; n <= 64; ++n) {
    auto groups = abelian_groups_of_order(n);
    CHECK(groups.size() == count_chains(n, 1));
    for (auto const& g : groups) {
      CHECK(is_invariant_chain(g));
      std::uint32_t p = 1;
      for (auto d : g) p *= d;
      CHECK(p == n);
    }
  }
  auto eight = abelian_groups_of_order(8);
  REQUIRE(eight.size() == 3);
  CHECK(eight[0] == Invariants{8});
  CHECK(eight[1] == Invariants{2, 4});
  CHECK(eight[2] == Invariants{2, 2, 2});
}

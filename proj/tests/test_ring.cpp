#include <doctest.h>

#include "centlab/constructors.hpp"
#include "centlab/error.hpp"
#include "centlab/ring.hpp"
#include "oracles.hpp"

using namespace centlab;

namespace {

void same_products(FiniteRing const& r) {
  auto n = oracle::build(r);
  for (Element x = 0; x < r.order(); ++x) {
    for (Element y = 0; y < r.order(); ++y) {
      REQUIRE(r.mul(x, y) == n.mul(x, y));
      REQUIRE(r.add(x, y) == n.add(x, y));
    }
  }
}

}  // namespace

TEST_CASE("bilinear product matches the naive expansion") {
  same_products(top_row_ring(2));
  same_products(top_row_ring(3));
  same_products(full_matrix_ring(2));
  same_products(upper_triangular_ring(4));
  same_products(cyclic_ring(12, 5));
  same_products(direct_product(top_row_ring(2), cyclic_ring(3, 1)));
}

TEST_CASE("constructed rings are associative on all element triples") {
  for (auto const& r : {top_row_ring(2), top_row_ring(3), full_matrix_ring(2),
                        upper_triangular_ring(2), upper_triangular_ring(3),
                        opposite_ring(top_row_ring(3)), cyclic_ring(9, 3)}) {
    CHECK(oracle::associative(oracle::build(r)));
  }
}

TEST_CASE("validation rejects non-associative tables with a witness triple") {
  // e1 e1 = e2, e2 e1 = e1, all else 0 on Z2 x Z2: (e1 e1) e1 = e1 but
  // e1 (e1 e1) = 0.
  try {
    validate_ring(AdditiveGroup({2, 2}), {2, 0, 1, 0});
    FAIL("expected NotAssociative");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotAssociative);
    CHECK(e.witness().size() == 3);
  }
}

TEST_CASE("validation rejects order-incompatible constants") {
  // On Z2 x Z4, e1 e2 must have order dividing 2; e2 itself has order 4.
  try {
    validate_ring(AdditiveGroup({2, 4}), {0, 2, 0, 0});
    FAIL("expected OrderIncompatible");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::OrderIncompatible);
    CHECK(e.witness() == std::vector<std::size_t>{1, 2});
  }
  CHECK_THROWS_AS(validate_ring(AdditiveGroup({2, 2}), {0, 0, 0}), Error);
  CHECK_THROWS_AS(validate_ring(AdditiveGroup({2, 2}), {0, 0, 0, 4}), Error);
}

TEST_CASE("validation agrees with the triple oracle on every Z2 x Z2 table") {
  AdditiveGroup const g({2, 2});
  for (std::uint32_t code = 0; code < 256; ++code) {
    std::vector<Element> sc{code & 3u, (code >> 2) & 3u, (code >> 4) & 3u, (code >> 6) & 3u};
    bool const ok = oracle::associative(oracle::build({2, 2}, sc));
    bool accepted = true;
    try {
      validate_ring(g, sc);
    } catch (Error const&) {
      accepted = false;
    }
    CHECK(accepted == ok);
  }
}

TEST_CASE("identity elements") {
  CHECK(full_matrix_ring(2).identity().has_value());
  CHECK_FALSE(top_row_ring(2).identity().has_value());
  CHECK(cyclic_ring(6, 1).identity() == Element{1});
  CHECK_FALSE(zero_ring({2}).identity().has_value());
  auto const m2 = full_matrix_ring(3);
  auto const one = *m2.identity();
  for (Element x = 0; x < m2.order(); ++x) {
    CHECK(m2.mul(one, x) == x);
    CHECK(m2.mul(x, one) == x);
  }
}

TEST_CASE("opposite ring reverses products") {
  auto const r = top_row_ring(3);
  auto const op = opposite_ring(r);
  CHECK(op.label() == "op(E3)");
  for (Element x = 0; x < r.order(); ++x)
    for (Element y = 0; y < r.order(); ++y) CHECK(op.mul(x, y) == r.mul(y, x));
}

TEST_CASE("direct product has the product order and componentwise commutativity") {
  auto const p = direct_product(top_row_ring(2), cyclic_ring(3, 1));
  CHECK(p.order() == 12);
  CHECK(std::vector<std::uint32_t>(p.group().invariants().begin(), p.group().invariants().end()) ==
        std::vector<std::uint32_t>{2, 6});
  CHECK_FALSE(p.is_commutative());
  CHECK(oracle::associative(oracle::build(p)));
  CHECK(direct_product(cyclic_ring(2, 1), cyclic_ring(2, 1)).is_commutative());
}

TEST_CASE("constructors reject bad parameters") {
  CHECK_THROWS_AS(top_row_ring(4), Error);
  CHECK_THROWS_AS(full_matrix_ring(1), Error);
  CHECK_THROWS_AS(cyclic_ring(0, 0), Error);
}

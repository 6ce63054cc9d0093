#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "centlab/abelian_group.hpp"

namespace centlab {

// A finite (not necessarily unital) ring. Multiplication is stored on the
// additive generators only, sc(i, j) = e_i * e_j, and extended bilinearly.
// Instances are immutable; the only way to obtain one is validate_ring.
class FiniteRing {
 public:
  FiniteRing() : FiniteRing(AdditiveGroup{}, {}, {}) {}

  AdditiveGroup const& group() const noexcept { return group_; }
  std::uint32_t order() const noexcept { return group_.order(); }
  std::size_t rank() const noexcept { return group_.rank(); }
  std::string const& label() const noexcept { return label_; }

  // Row-major k x k table of generator products.
  std::span<Element const> table() const noexcept { return sc_; }
  Element sc(std::size_t i, std::size_t j) const noexcept {
    return sc_[i * group_.rank() + j];
  }

  Element add(Element x, Element y) const noexcept { return group_.add(x, y); }
  Element neg(Element x) const noexcept { return group_.neg(x); }
  Element sub(Element x, Element y) const noexcept { return group_.sub(x, y); }
  std::uint32_t additive_order(Element x) const noexcept {
    return group_.additive_order(x);
  }
  Element mul(Element x, Element y) const noexcept {
    if (!mul_cache_.empty()) return mul_cache_[std::size_t{x} * order() + y];
    return mul_uncached(x, y);
  }
  bool commute(Element x, Element y) const noexcept {
    return mul(x, y) == mul(y, x);
  }

  bool is_commutative() const noexcept;
  // Two-sided identity if one exists.
  std::optional<Element> identity() const;

  FiniteRing with_label(std::string label) const;

  // Structural equality: same additive group and identical table.
  bool same_table(FiniteRing const& other) const noexcept {
    return group_ == other.group_ && sc_ == other.sc_;
  }

 private:
  friend FiniteRing validate_ring(AdditiveGroup, std::vector<Element>,
                                  std::string);
  FiniteRing(AdditiveGroup group, std::vector<Element> sc, std::string label);

  Element mul_uncached(Element x, Element y) const noexcept;

  AdditiveGroup group_;
  std::vector<Element> sc_;
  std::string label_;
  std::vector<Element> mul_cache_;
};

// Full multiplication table is cached up to this order.
inline constexpr std::uint32_t kMulCacheMaxOrder = 1024;

// Checks the table shape, that every product e_i e_j has additive order
// dividing gcd(d_i, d_j), and associativity on all generator triples.
// Throws Error{MalformedTable | OrderIncompatible | NotAssociative}.
FiniteRing validate_ring(AdditiveGroup group, std::vector<Element> sc,
                         std::string label = {});

// Bilinear product on a raw table without validation. Used by the
// validator and the enumerator.
Element bilinear_mul(AdditiveGroup const& group, std::span<Element const> sc,
                     Element x, Element y) noexcept;

}  // namespace centlab

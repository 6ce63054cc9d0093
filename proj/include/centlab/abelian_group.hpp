#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace centlab {

// Elements are addressed by their mixed-radix index into [0, order), with
// the first invariant factor varying fastest. Index 0 is the zero element.
using Element = std::uint32_t;
using Invariants = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kMaxGroupOrder = 1u << 20;

// Finite abelian group Z_{d1} x ... x Z_{dk} in invariant-factor form
// (every di >= 2 and d1 | d2 | ... | dk). The empty list is the trivial
// group of order 1.
class AdditiveGroup {
 public:
  AdditiveGroup() = default;
  explicit AdditiveGroup(Invariants invariants);

  std::span<std::uint32_t const> invariants() const noexcept { return inv_; }
  std::size_t rank() const noexcept { return inv_.size(); }
  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t exponent() const noexcept { return inv_.empty() ? 1 : inv_.back(); }

  std::vector<std::uint32_t> decode(Element x) const;
  Element encode(std::span<std::uint32_t const> coords) const;
  std::uint32_t coord(Element x, std::size_t i) const noexcept {
    return (x / stride_[i]) % inv_[i];
  }

  // The i-th standard generator e_i.
  Element generator(std::size_t i) const noexcept { return stride_[i]; }

  Element add(Element x, Element y) const noexcept;
  Element neg(Element x) const noexcept;
  Element sub(Element x, Element y) const noexcept { return add(x, neg(y)); }
  Element scale(Element x, std::uint64_t m) const noexcept;
  std::uint32_t additive_order(Element x) const noexcept;

  bool operator==(AdditiveGroup const& other) const noexcept {
    return inv_ == other.inv_;
  }

 private:
  Invariants inv_;
  std::vector<std::uint32_t> stride_;
  std::uint32_t order_ = 1;
};

// True iff every factor is >= 2 and each divides the next.
bool is_invariant_chain(std::span<std::uint32_t const> invariants) noexcept;

// Invariant-factor form of Z_{m1} x ... x Z_{mr} for arbitrary moduli
// (factors equal to 1 are dropped).
Invariants normalize_invariants(std::span<std::uint32_t const> moduli);

// One invariant-factor tuple per abelian group of order n (1 <= n <= 256),
// ordered by rank, then lexicographically.
std::vector<Invariants> abelian_groups_of_order(std::uint32_t n);

// "2,2" style rendering; "" for the trivial group.
std::string join_invariants(std::span<std::uint32_t const> invariants,
                            char sep = ',');

}  // namespace centlab

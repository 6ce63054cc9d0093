#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "centlab/abelian_group.hpp"

namespace centlab {

// Which algebraic closure a set is known to have. Sets produced by ring
// operations (center, centralizers) carry Subring; user-built sets start as
// None and are checked on demand.
enum class Closure : std::uint8_t { None, Subgroup, Subring };

// Membership mask over the element indices [0, universe). Value type; never
// mutated after construction.
class ElementSet {
 public:
  ElementSet() = default;

  static ElementSet none(std::uint32_t universe, Closure closure = Closure::None);
  static ElementSet all(std::uint32_t universe, Closure closure = Closure::Subring);
  static ElementSet from_elements(std::uint32_t universe,
                                  std::span<Element const> elements,
                                  Closure closure = Closure::None);
  static ElementSet from_words(std::uint32_t universe,
                               std::vector<std::uint64_t> words,
                               Closure closure = Closure::None);
  template <typename Pred>
  static ElementSet from_predicate(std::uint32_t universe, Pred&& pred,
                                   Closure closure = Closure::None) {
    std::vector<std::uint64_t> words((universe + 63) / 64, 0);
    for (Element x = 0; x < universe; ++x) {
      if (pred(x)) words[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
    return from_words(universe, std::move(words), closure);
  }

  std::uint32_t universe() const noexcept { return universe_; }
  std::uint32_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool is_full() const noexcept { return count_ == universe_; }
  Closure closure() const noexcept { return closure_; }
  bool is_subgroup() const noexcept { return closure_ != Closure::None; }
  bool is_subring() const noexcept { return closure_ == Closure::Subring; }

  bool contains(Element x) const noexcept {
    return x < universe_ && ((words_[x >> 6] >> (x & 63)) & 1u);
  }
  std::vector<Element> elements() const;
  std::span<std::uint64_t const> words() const noexcept { return words_; }

  bool is_subset_of(ElementSet const& other) const noexcept;
  ElementSet intersect(ElementSet const& other) const;
  ElementSet unite(ElementSet const& other) const;
  ElementSet with_closure(Closure closure) const;

  // Equality is on membership only; closure flags are metadata.
  bool operator==(ElementSet const& other) const noexcept {
    return universe_ == other.universe_ && words_ == other.words_;
  }

  std::size_t hash() const noexcept;

 private:
  std::vector<std::uint64_t> words_;
  std::uint32_t universe_ = 0;
  std::uint32_t count_ = 0;
  Closure closure_ = Closure::None;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet const& s) const noexcept { return s.hash(); }
};

}  // namespace centlab

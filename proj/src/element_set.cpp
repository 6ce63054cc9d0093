#include "centlab/element_set.hpp"

#include <bit>

#include "centlab/error.hpp"

namespace centlab {

namespace {

std::size_t word_count(std::uint32_t universe) { return (universe + 63) / 64; }

}  // namespace

ElementSet ElementSet::none(std::uint32_t universe, Closure closure) {
  return from_words(universe, std::vector<std::uint64_t>(word_count(universe), 0),
                    closure);
}

ElementSet ElementSet::all(std::uint32_t universe, Closure closure) {
  std::vector<std::uint64_t> words(word_count(universe), ~std::uint64_t{0});
  return from_words(universe, std::move(words), closure);
}

ElementSet ElementSet::from_elements(std::uint32_t universe,
                                     std::span<Element const> elements,
                                     Closure closure) {
  std::vector<std::uint64_t> words(word_count(universe), 0);
  for (auto x : elements) {
    if (x >= universe) {
      throw Error(ErrorKind::NotMember,
                  "element index " + std::to_string(x) + " outside ring of order " +
                      std::to_string(universe));
    }
    words[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  return from_words(universe, std::move(words), closure);
}

ElementSet ElementSet::from_words(std::uint32_t universe,
                                  std::vector<std::uint64_t> words,
                                  Closure closure) {
  ElementSet s;
  s.universe_ = universe;
  s.closure_ = closure;
  words.resize(word_count(universe), 0);
  if (universe % 64 != 0 && !words.empty()) {
    words.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
  }
  std::uint32_t count = 0;
  for (auto w : words) count += static_cast<std::uint32_t>(std::popcount(w));
  s.words_ = std::move(words);
  s.count_ = count;
  return s;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<Element>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool ElementSet::is_subset_of(ElementSet const& other) const noexcept {
  if (universe_ != other.universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

ElementSet ElementSet::intersect(ElementSet const& other) const {
  std::vector<std::uint64_t> words(words_);
  for (std::size_t i = 0; i < words.size(); ++i) words[i] &= other.words_[i];
  // Intersections of subgroups (subrings) stay subgroups (subrings).
  Closure c = std::min(closure_, other.closure_);
  return from_words(universe_, std::move(words), c);
}

ElementSet ElementSet::unite(ElementSet const& other) const {
  std::vector<std::uint64_t> words(words_);
  for (std::size_t i = 0; i < words.size(); ++i) words[i] |= other.words_[i];
  return from_words(universe_, std::move(words), Closure::None);
}

ElementSet ElementSet::with_closure(Closure closure) const {
  ElementSet s = *this;
  s.closure_ = closure;
  return s;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = universe_;
  for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ (w + (h >> 17));
  return h;
}

}  // namespace centlab

#include "centlab/ring.hpp"

#include <numeric>

#include "centlab/error.hpp"

namespace centlab {

Element bilinear_mul(AdditiveGroup const& group, std::span<Element const> sc,
                     Element x, Element y) noexcept {
  std::size_t const k = group.rank();
  auto const inv = group.invariants();
  // Small fixed buffers: rank is bounded by log2(kMaxGroupOrder).
  std::uint32_t xc[20], yc[20];
  std::uint64_t acc[20] = {};
  for (std::size_t i = 0; i < k; ++i) {
    xc[i] = x % inv[i];
    x /= inv[i];
    yc[i] = y % inv[i];
    y /= inv[i];
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (xc[a] == 0) continue;
    for (std::size_t b = 0; b < k; ++b) {
      if (yc[b] == 0) continue;
      Element p = sc[a * k + b];
      if (p == 0) continue;
      std::uint64_t const m = std::uint64_t{xc[a]} * yc[b];
      for (std::size_t l = 0; l < k; ++l) {
        acc[l] += m * (p % inv[l]);
        p /= inv[l];
      }
    }
  }
  Element r = 0;
  std::uint32_t stride = 1;
  for (std::size_t l = 0; l < k; ++l) {
    r += static_cast<std::uint32_t>(acc[l] % inv[l]) * stride;
    stride *= inv[l];
  }
  return r;
}

FiniteRing::FiniteRing(AdditiveGroup group, std::vector<Element> sc,
                       std::string label)
    : group_(std::move(group)), sc_(std::move(sc)), label_(std::move(label)) {
  std::uint32_t const n = group_.order();
  if (n <= kMulCacheMaxOrder) {
    mul_cache_.resize(std::size_t{n} * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        mul_cache_[std::size_t{x} * n + y] = mul_uncached(x, y);
      }
    }
  }
}

Element FiniteRing::mul_uncached(Element x, Element y) const noexcept {
  return bilinear_mul(group_, sc_, x, y);
}

bool FiniteRing::is_commutative() const noexcept {
  std::size_t const k = rank();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (sc(i, j) != sc(j, i)) return false;
    }
  }
  return true;
}

std::optional<Element> FiniteRing::identity() const {
  std::size_t const k = rank();
  for (Element e = 0; e < order(); ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      Element const g = group_.generator(i);
      ok = mul(e, g) == g && mul(g, e) == g;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

FiniteRing FiniteRing::with_label(std::string label) const {
  FiniteRing copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

FiniteRing validate_ring(AdditiveGroup group, std::vector<Element> sc,
                         std::string label) {
  std::size_t const k = group.rank();
  if (sc.size() != k * k) {
    throw Error(ErrorKind::MalformedTable,
                "structure-constant table has " + std::to_string(sc.size()) +
                    " entries, expected " + std::to_string(k * k));
  }
  auto const inv = group.invariants();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Element const p = sc[i * k + j];
      if (p >= group.order()) {
        throw Error(ErrorKind::MalformedTable,
                    "entry sc " + std::to_string(i + 1) + " " + std::to_string(j + 1) +
                        " is not an element index",
                    {i + 1, j + 1});
      }
      if (std::gcd(inv[i], inv[j]) % group.additive_order(p) != 0) {
        throw Error(ErrorKind::OrderIncompatible,
                    "additive order of e" + std::to_string(i + 1) + "*e" +
                        std::to_string(j + 1) + " does not divide gcd(d" +
                        std::to_string(i + 1) + ", d" + std::to_string(j + 1) + ")",
                    {i + 1, j + 1});
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        Element const lhs = bilinear_mul(group, sc, sc[i * k + j], group.generator(l));
        Element const rhs = bilinear_mul(group, sc, group.generator(i), sc[j * k + l]);
        if (lhs != rhs) {
          throw Error(ErrorKind::NotAssociative,
                      "(e" + std::to_string(i + 1) + "e" + std::to_string(j + 1) + ")e" +
                          std::to_string(l + 1) + " != e" + std::to_string(i + 1) + "(e" +
                          std::to_string(j + 1) + "e" + std::to_string(l + 1) + ")",
                      {i + 1, j + 1, l + 1});
        }
      }
    }
  }
  return FiniteRing(std::move(group), std::move(sc), std::move(label));
}

}  // namespace centlab

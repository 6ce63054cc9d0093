#include "centlab/constructors.hpp"

#include <algorithm>
#include <vector>

#include "centlab/error.hpp"

namespace centlab {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

// Matrix-unit ring: generators are the units E_ab listed in `units`, all
// with additive order m; E_ab * E_cd = [b == c] E_ad.
FiniteRing matrix_unit_ring(std::uint32_t m,
                            std::vector<std::pair<int, int>> const& units,
                            std::string label) {
  std::size_t const k = units.size();
  AdditiveGroup group(Invariants(k, m));
  std::vector<Element> sc(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto [a, b] = units[i];
      auto [c, d] = units[j];
      if (b != c) continue;
      auto it = std::find(units.begin(), units.end(), std::pair{a, d});
      sc[i * k + j] = group.generator(static_cast<std::size_t>(it - units.begin()));
    }
  }
  return validate_ring(std::move(group), std::move(sc), std::move(label));
}

}  // namespace

FiniteRing zero_ring(Invariants invariants) {
  AdditiveGroup group(std::move(invariants));
  std::vector<Element> sc(group.rank() * group.rank(), 0);
  std::string label = "zero(" + join_invariants(group.invariants()) + ")";
  return validate_ring(std::move(group), std::move(sc), std::move(label));
}

FiniteRing cyclic_ring(std::uint32_t n, std::uint32_t c) {
  if (n == 0 || (n > 1 && c >= n)) {
    throw Error(ErrorKind::BadParameter, "cyclic ring needs n >= 1 and 0 <= c < n");
  }
  if (n == 1) return zero_ring({}).with_label("Z1");
  AdditiveGroup group(Invariants{n});
  std::string label = c == 1 ? "Z" + std::to_string(n)
                             : "Z" + std::to_string(n) + "[c=" + std::to_string(c) + "]";
  return validate_ring(std::move(group), {c}, std::move(label));
}

FiniteRing top_row_ring(std::uint32_t p) {
  if (!is_prime(p) || p > 7) {
    throw Error(ErrorKind::BadParameter, "top-row ring needs a prime p <= 7");
  }
  return matrix_unit_ring(p, {{1, 1}, {1, 2}}, "E" + std::to_string(p));
}

FiniteRing full_matrix_ring(std::uint32_t m) {
  if (m < 2 || m > 4) throw Error(ErrorKind::BadParameter, "matrix ring needs 2 <= m <= 4");
  return matrix_unit_ring(m, {{1, 1}, {1, 2}, {2, 1}, {2, 2}},
                          "M2(Z" + std::to_string(m) + ")");
}

FiniteRing upper_triangular_ring(std::uint32_t m) {
  if (m < 2 || m > 4) {
    throw Error(ErrorKind::BadParameter, "upper triangular ring needs 2 <= m <= 4");
  }
  return matrix_unit_ring(m, {{1, 1}, {1, 2}, {2, 2}}, "UT2(Z" + std::to_string(m) + ")");
}

FiniteRing direct_product(FiniteRing const& a, FiniteRing const& b) {
  std::uint64_t const order = std::uint64_t{a.order()} * b.order();
  if (order > kMaxProductOrder) {
    throw Error(ErrorKind::BadParameter,
                "direct product order " + std::to_string(order) + " exceeds " +
                    std::to_string(kMaxProductOrder));
  }
  std::vector<std::uint32_t> moduli(a.group().invariants().begin(),
                                    a.group().invariants().end());
  moduli.insert(moduli.end(), b.group().invariants().begin(),
                b.group().invariants().end());
  std::uint32_t const na = a.order();
  auto mul = [&](std::uint32_t x, std::uint32_t y) {
    return a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  };
  return ring_from_products(moduli, mul, a.label() + " x " + b.label());
}

FiniteRing opposite_ring(FiniteRing const& a) {
  std::size_t const k = a.rank();
  std::vector<Element> sc(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) sc[i * k + j] = a.sc(j, i);
  }
  return validate_ring(a.group(), std::move(sc), "op(" + a.label() + ")");
}

FiniteRing ring_from_products(
    std::span<std::uint32_t const> moduli,
    std::function<std::uint32_t(std::uint32_t, std::uint32_t)> const& mul,
    std::string label) {
  std::vector<std::uint32_t> mods;
  for (auto m : moduli) {
    if (m == 0) throw Error(ErrorKind::BadParameter, "modulus must be positive");
    mods.push_back(m);
  }
  std::uint64_t order = 1;
  for (auto m : mods) order *= m;
  if (order > kMaxGroupOrder) throw Error(ErrorKind::OrderTooLarge, "group too large");
  std::uint32_t const n = static_cast<std::uint32_t>(order);

  if (is_invariant_chain(mods)) {
    // Raw coordinates already are invariant-factor coordinates.
    AdditiveGroup group(mods);
    std::size_t const k = group.rank();
    std::vector<Element> sc(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        sc[i * k + j] = mul(group.generator(i), group.generator(j));
      }
    }
    return validate_ring(std::move(group), std::move(sc), std::move(label));
  }

  auto raw_add = [&](std::uint32_t x, std::uint32_t y) {
    std::uint32_t r = 0, stride = 1;
    for (auto m : mods) {
      r += ((x % m + y % m) % m) * stride;
      x /= m;
      y /= m;
      stride *= m;
    }
    return r;
  };
  auto raw_scale = [&](std::uint32_t x, std::uint32_t t) {
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < t; ++i) r = raw_add(r, x);
    return r;
  };

  // Greedy basis: repeatedly take an element of maximal order modulo the
  // current span and shift it within its coset to have that exact order.
  std::vector<std::uint32_t> basis, orders;
  std::vector<char> in_span(n, 0);
  std::vector<std::uint32_t> span{0};
  in_span[0] = 1;
  while (span.size() < n) {
    std::uint32_t best = 0, best_order = 0;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (in_span[x]) continue;
      std::uint32_t m = 1;
      for (std::uint32_t y = x; !in_span[y]; y = raw_add(y, x)) ++m;
      if (m > best_order) {
        best_order = m;
        best = x;
      }
    }
    std::uint32_t lifted = n;
    for (auto s : span) {
      std::uint32_t const y = raw_add(best, s);
      if (raw_scale(y, best_order) == 0) {
        lifted = y;
        break;
      }
    }
    if (lifted == n) {
      throw Error(ErrorKind::BadParameter, "failed to split cyclic summand");
    }
    std::vector<std::uint32_t> grown;
    std::uint32_t shift = lifted;
    for (std::uint32_t j = 1; j < best_order; ++j) {
      for (auto s : span) grown.push_back(raw_add(s, shift));
      shift = raw_add(shift, lifted);
    }
    for (auto g : grown) in_span[g] = 1;
    span.insert(span.end(), grown.begin(), grown.end());
    basis.push_back(lifted);
    orders.push_back(best_order);
  }
  std::reverse(basis.begin(), basis.end());
  std::reverse(orders.begin(), orders.end());

  AdditiveGroup group(orders);
  std::vector<Element> to_new(n, 0);
  for (Element e = 0; e < n; ++e) {
    auto const coords = group.decode(e);
    std::uint32_t raw = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      raw = raw_add(raw, raw_scale(basis[i], coords[i]));
    }
    to_new[raw] = e;
  }
  std::size_t const k = basis.size();
  std::vector<Element> sc(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) sc[i * k + j] = to_new[mul(basis[i], basis[j])];
  }
  return validate_ring(std::move(group), std::move(sc), std::move(label));
}

}  // namespace centlab

#include "centlab/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "centlab/error.hpp"

namespace centlab {

AdditiveGroup::AdditiveGroup(Invariants invariants) : inv_(std::move(invariants)) {
  if (!is_invariant_chain(inv_)) {
    throw Error(ErrorKind::BadParameter,
                "invariants must satisfy d1 | d2 | ... with every di >= 2: (" +
                    join_invariants(inv_) + ")");
  }
  stride_.reserve(inv_.size());
  std::uint64_t order = 1;
  for (auto d : inv_) {
    stride_.push_back(static_cast<std::uint32_t>(order));
    order *= d;
    if (order > kMaxGroupOrder) {
      throw Error(ErrorKind::OrderTooLarge,
                  "group order exceeds " + std::to_string(kMaxGroupOrder));
    }
  }
  order_ = static_cast<std::uint32_t>(order);
}

std::vector<std::uint32_t> AdditiveGroup::decode(Element x) const {
  std::vector<std::uint32_t> coords(inv_.size());
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    coords[i] = x % inv_[i];
    x /= inv_[i];
  }
  return coords;
}

Element AdditiveGroup::encode(std::span<std::uint32_t const> coords) const {
  Element x = 0;
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    x += (coords[i] % inv_[i]) * stride_[i];
  }
  return x;
}

Element AdditiveGroup::add(Element x, Element y) const noexcept {
  Element r = 0;
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    std::uint32_t const d = inv_[i];
    std::uint32_t c = x % d + y % d;
    if (c >= d) c -= d;
    r += c * stride_[i];
    x /= d;
    y /= d;
  }
  return r;
}

Element AdditiveGroup::neg(Element x) const noexcept {
  Element r = 0;
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    std::uint32_t const d = inv_[i];
    std::uint32_t const c = x % d;
    r += (c == 0 ? 0 : d - c) * stride_[i];
    x /= d;
  }
  return r;
}

Element AdditiveGroup::scale(Element x, std::uint64_t m) const noexcept {
  Element r = 0;
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    std::uint32_t const d = inv_[i];
    r += static_cast<std::uint32_t>((x % d) * (m % d) % d) * stride_[i];
    x /= d;
  }
  return r;
}

std::uint32_t AdditiveGroup::additive_order(Element x) const noexcept {
  std::uint32_t ord = 1;
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    std::uint32_t const d = inv_[i];
    std::uint32_t const c = x % d;
    ord = std::lcm(ord, d / std::gcd(c, d));
    x /= d;
  }
  return ord;
}

bool is_invariant_chain(std::span<std::uint32_t const> invariants) noexcept {
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (invariants[i] < 2) return false;
    if (i > 0 && invariants[i] % invariants[i - 1] != 0) return false;
  }
  return true;
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> f;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

// Partitions of n into parts, each listed in non-increasing order.
void partitions(std::uint32_t n, std::uint32_t max_part,
                std::vector<std::uint32_t>& cur,
                std::vector<std::vector<std::uint32_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Invariants normalize_invariants(std::span<std::uint32_t const> moduli) {
  // Collect prime-power exponents per prime, then deal them back out so the
  // largest powers of every prime land in the last factor.
  std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> by_prime;
  for (auto m : moduli) {
    for (auto [p, e] : factorize(m)) {
      auto it = std::find_if(by_prime.begin(), by_prime.end(),
                             [p = p](auto const& entry) { return entry.first == p; });
      if (it == by_prime.end()) {
        by_prime.push_back({p, {}});
        it = std::prev(by_prime.end());
      }
      it->second.push_back(e);
    }
  }
  std::size_t rank = 0;
  for (auto& [p, exps] : by_prime) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    rank = std::max(rank, exps.size());
  }
  Invariants out(rank, 1);
  for (auto const& [p, exps] : by_prime) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (std::uint32_t e = 0; e < exps[i]; ++e) out[rank - 1 - i] *= p;
    }
  }
  return out;
}

std::vector<Invariants> abelian_groups_of_order(std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::BadParameter, "group order must be >= 1");
  if (n > 256) {
    throw Error(ErrorKind::OrderTooLarge, "abelian group listing supports orders <= 256");
  }
  std::vector<Invariants> groups{{}};
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<std::uint32_t>> parts;
    std::vector<std::uint32_t> cur;
    partitions(e, e, cur, parts);
    std::vector<Invariants> next;
    for (auto const& g : groups) {
      for (auto const& lambda : parts) {
        std::size_t const rank = std::max(g.size(), lambda.size());
        Invariants combined(rank, 1);
        for (std::size_t i = 0; i < g.size(); ++i) combined[rank - g.size() + i] = g[i];
        for (std::size_t i = 0; i < lambda.size(); ++i) {
          for (std::uint32_t j = 0; j < lambda[i]; ++j) combined[rank - 1 - i] *= p;
        }
        next.push_back(std::move(combined));
      }
    }
    groups = std::move(next);
  }
  std::sort(groups.begin(), groups.end(), [](Invariants const& a, Invariants const& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return groups;
}

std::string join_invariants(std::span<std::uint32_t const> invariants, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (i) os << sep;
    os << invariants[i];
  }
  return os.str();
}

}  // namespace centlab

#include "centlab/canonical.hpp"

#include <algorithm>

#include "centlab/centralizer.hpp"
#include "centlab/error.hpp"

namespace centlab {

namespace {

void extend_automorphisms(AdditiveGroup const& group, std::size_t i,
                          std::vector<Element>& images, std::vector<Element>& span,
                          std::vector<Automorphism>& out) {
  std::size_t const k = group.rank();
  std::uint32_t const n = group.order();
  if (i == k) {
    Automorphism phi;
    phi.map.assign(n, 0);
    phi.inverse.assign(n, 0);
    for (Element x = 0; x < n; ++x) {
      Element y = 0;
      for (std::size_t j = 0; j < k; ++j) {
        y = group.add(y, group.scale(images[j], group.coord(x, j)));
      }
      phi.map[x] = y;
      phi.inverse[y] = x;
    }
    out.push_back(std::move(phi));
    return;
  }
  std::uint32_t const d = group.invariants()[i];
  std::vector<char> member(n, 0);
  for (auto s : span) member[s] = 1;
  for (Element g = 0; g < n; ++g) {
    if (group.scale(g, d) != 0) continue;
    // The partial map stays injective iff span + <g> has |span| * d elements.
    std::vector<Element> grown = span;
    bool injective = true;
    Element shift = g;
    for (std::uint32_t c = 1; c < d && injective; ++c) {
      for (auto s : span) {
        Element const t = group.add(s, shift);
        if (member[t]) {
          injective = false;
          break;
        }
        grown.push_back(t);
      }
      shift = group.add(shift, g);
    }
    if (!injective) continue;
    images.push_back(g);
    extend_automorphisms(group, i + 1, images, grown, out);
    images.pop_back();
  }
}

}  // namespace

std::vector<Automorphism> additive_automorphisms(AdditiveGroup const& group) {
  if (group.order() > kCanonicalMaxOrder) {
    throw Error(ErrorKind::OrderTooLarge,
                "automorphism scan supports orders <= " +
                    std::to_string(kCanonicalMaxOrder));
  }
  std::vector<Automorphism> out;
  std::vector<Element> images;
  std::vector<Element> span{0};
  extend_automorphisms(group, 0, images, span, out);
  // Identity first.
  auto is_identity = [](Automorphism const& phi) {
    for (Element x = 0; x < phi.map.size(); ++x) {
      if (phi.map[x] != x) return false;
    }
    return true;
  };
  auto it = std::find_if(out.begin(), out.end(), is_identity);
  std::rotate(out.begin(), it, std::next(it));
  return out;
}

std::vector<Element> transport_table(FiniteRing const& ring, Automorphism const& phi) {
  std::size_t const k = ring.rank();
  auto const& g = ring.group();
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Element const p = ring.mul(phi.map[g.generator(i)], phi.map[g.generator(j)]);
      table[i * k + j] = phi.inverse[p];
    }
  }
  return table;
}

FiniteRing canonicalize(FiniteRing const& ring) {
  auto const auts = additive_automorphisms(ring.group());
  std::vector<Element> best(ring.table().begin(), ring.table().end());
  for (auto const& phi : auts) {
    auto t = transport_table(ring, phi);
    if (t < best) best = std::move(t);
  }
  return validate_ring(ring.group(), std::move(best), ring.label());
}

Isomorphism is_isomorphic(FiniteRing const& a, FiniteRing const& b) {
  if (a.order() != b.order() || !(a.group() == b.group())) return Isomorphism::No;
  if (a.same_table(b)) return Isomorphism::Yes;
  if (a.order() <= kCanonicalMaxOrder) {
    return canonicalize(a).same_table(canonicalize(b)) ? Isomorphism::Yes
                                                       : Isomorphism::No;
  }
  if (a.is_commutative() != b.is_commutative()) return Isomorphism::No;
  CommutationTable ta(a), tb(b);
  if (center(ta).size() != center(tb).size()) return Isomorphism::No;
  std::vector<std::uint32_t> sa, sb;
  for (Element x = 0; x < a.order(); ++x) {
    sa.push_back(ta.centralizer(x).size());
    sb.push_back(tb.centralizer(x).size());
  }
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return Isomorphism::No;
  if (cent_structure(ta).n() != cent_structure(tb).n()) return Isomorphism::No;
  return Isomorphism::Unknown;
}

}  // namespace centlab

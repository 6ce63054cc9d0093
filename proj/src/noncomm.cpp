#include "centlab/noncomm.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "centlab/error.hpp"

namespace centlab {

NoncommGraph::NoncommGraph(CommutationTable const& table) {
  auto const z = center(table);
  for (Element x = 0; x < table.order(); ++x) {
    if (!z.contains(x)) vertices_.push_back(x);
  }
  std::size_t const m = vertices_.size();
  words_ = (m + 63) / 64;
  adj_.assign(m * words_, 0);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      if (!table.commute(vertices_[u], vertices_[v])) {
        adj_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        adj_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
      }
    }
  }
}

std::size_t NoncommGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (auto w : adj_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

NoncommGraph noncommuting_graph(FiniteRing const& ring) { return NoncommGraph(ring); }

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t count(Bits const& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool any(Bits const& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t first(Bits const& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(b[i]));
  }
  return std::numeric_limits<std::size_t>::max();
}

void reset(Bits& b, std::size_t v) { b[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

// Branch and bound with greedy colouring bounds.
class CliqueSearch {
 public:
  explicit CliqueSearch(NoncommGraph const& g) : g_(g) {}

  std::size_t maximum() {
    Bits all(g_.words(), 0);
    for (std::size_t v = 0; v < g_.size(); ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    best_ = 0;
    std::size_t depth = 0;
    expand(all, depth);
    return best_;
  }

  // Lexicographically smallest clique of exactly `target` vertices.
  std::vector<std::size_t> lex_first(std::size_t target) {
    Bits all(g_.words(), 0);
    for (std::size_t v = 0; v < g_.size(); ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<std::size_t> clique;
    find(all, target, clique);
    return clique;
  }

 private:
  // Greedy sequential colouring of `p`; returns vertices in colour order and
  // the colour count reached at each position.
  void colour(Bits const& p, std::vector<std::size_t>& order,
              std::vector<std::size_t>& bounds) const {
    order.clear();
    bounds.clear();
    Bits uncoloured = p;
    std::size_t c = 0;
    while (any(uncoloured)) {
      ++c;
      Bits avail = uncoloured;
      while (any(avail)) {
        std::size_t const v = first(avail);
        reset(avail, v);
        reset(uncoloured, v);
        auto nb = g_.neighbours(v);
        for (std::size_t i = 0; i < avail.size(); ++i) avail[i] &= ~nb[i];
        order.push_back(v);
        bounds.push_back(c);
      }
    }
  }

  std::size_t colour_bound(Bits const& p) const {
    std::vector<std::size_t> order, bounds;
    colour(p, order, bounds);
    return bounds.empty() ? 0 : bounds.back();
  }

  void expand(Bits p, std::size_t& depth) {
    std::vector<std::size_t> order, bounds;
    colour(p, order, bounds);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (depth + bounds[idx] <= best_) return;
      std::size_t const v = order[idx];
      Bits next(p.size());
      auto nb = g_.neighbours(v);
      for (std::size_t i = 0; i < p.size(); ++i) next[i] = p[i] & nb[i];
      ++depth;
      if (any(next)) {
        expand(std::move(next), depth);
      } else if (depth > best_) {
        best_ = depth;
      }
      --depth;
      reset(p, v);
    }
  }

  bool find(Bits const& p, std::size_t target, std::vector<std::size_t>& clique) {
    if (clique.size() == target) return true;
    Bits rest = p;
    while (any(rest)) {
      if (clique.size() + count(rest) < target) return false;
      std::size_t const v = first(rest);
      reset(rest, v);
      // Candidates after v that are adjacent to v.
      Bits next(rest.size());
      auto nb = g_.neighbours(v);
      for (std::size_t i = 0; i < rest.size(); ++i) next[i] = rest[i] & nb[i];
      if (clique.size() + 1 + colour_bound(next) < target) continue;
      clique.push_back(v);
      if (find(next, target, clique)) return true;
      clique.pop_back();
    }
    return false;
  }

  NoncommGraph const& g_;
  std::size_t best_ = 0;
};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t sat_factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r = sat_mul(r, i);
  return r;
}

}  // namespace

CliqueResult max_noncommuting_set(NoncommGraph const& graph) {
  if (graph.size() == 0) return {};
  CliqueSearch search(graph);
  std::size_t const t = search.maximum();
  auto const positions = search.lex_first(t);
  CliqueResult out;
  out.t = t;
  out.witness.clear();
  for (auto p : positions) out.witness.push_back(graph.vertices()[p]);
  return out;
}

CliqueResult max_noncommuting_set(FiniteRing const& ring) {
  return max_noncommuting_set(NoncommGraph(ring));
}

bool CoverReport::bounds_hold() const {
  bool ok = alpha2.holds && index_bound.holds;
  for (auto const& l : lemma_checks) ok = ok && l.holds && l.equality_holds;
  return ok;
}

CoverReport cover_report(FiniteRing const& ring, std::span<Element const> set) {
  return cover_report(ring, CommutationTable(ring), set);
}

CoverReport cover_report(FiniteRing const& ring, CommutationTable const& table,
                         std::span<Element const> set) {
  std::size_t const m = set.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (set[i] >= ring.order()) {
      throw Error(ErrorKind::NotMember, "element " + std::to_string(set[i]) + " not in ring");
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      if (table.commute(set[i], set[j])) {
        throw Error(ErrorKind::NotPairwiseNoncommuting,
                    "elements " + std::to_string(set[i]) + " and " +
                        std::to_string(set[j]) + " commute",
                    {i, j});
      }
    }
  }
  std::uint32_t const n = ring.order();
  auto const z = center(table);

  CoverReport rep;
  rep.members = m;
  std::vector<ElementSet> cs;
  for (auto x : set) cs.push_back(table.centralizer(x));

  auto full = ElementSet::all(n);
  ElementSet uni = ElementSet::none(n);
  ElementSet inter = full;
  for (auto const& c : cs) {
    uni = uni.unite(c);
    inter = inter.intersect(c);
  }
  rep.covers = uni.is_full();
  rep.intersection_is_center = inter == z;
  rep.d_index = n / inter.size();

  bool all_proper = true;
  for (auto const& c : cs) {
    rep.betas.push_back(n / c.size());
    all_proper = all_proper && !c.is_full();
  }
  std::sort(rep.betas.begin(), rep.betas.end());

  rep.irredundant = rep.covers && all_proper;
  for (std::size_t i = 0; rep.irredundant && i < m; ++i) {
    ElementSet others = ElementSet::none(n);
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) others = others.unite(cs[j]);
    }
    if (others.is_full()) rep.irredundant = false;
  }

  if (rep.irredundant && m >= 3) {
    std::uint64_t const mm = m;
    rep.alpha2.applicable = true;
    rep.alpha2.value = rep.betas[1];
    rep.alpha2.bound = mm - 1;
    rep.alpha2.holds = rep.alpha2.value <= rep.alpha2.bound;
    rep.alpha2.rule = "alpha2 <= m-1";
    rep.index_bound.applicable = true;
    rep.index_bound.value = rep.d_index;
    if (rep.betas[1] == mm - 1) {
      rep.index_bound.bound = sat_mul((mm - 1) * (mm - 1), sat_factorial(mm - 3));
      rep.index_bound.rule = "|R:D| <= (m-1)^2 (m-3)!";
    } else {
      rep.index_bound.bound =
          sat_mul(sat_mul((mm - 2) * (mm - 2), mm - 2), sat_factorial(mm - 3));
      rep.index_bound.rule = "|R:D| <= (m-2)^3 (m-3)!";
    }
    rep.index_bound.holds = rep.index_bound.value <= rep.index_bound.bound;
  }

  if (rep.covers && all_proper) {
    auto check = [&](std::string name, ElementSet const& subgroup,
                     std::vector<std::size_t> const& rest) {
      if (rest.empty() || subgroup.is_full()) return;
      CoverLemmaCheck c;
      c.subgroup = std::move(name);
      c.k = rest.size();
      std::vector<std::uint32_t> betas;
      for (auto i : rest) betas.push_back(n / cs[i].size());
      std::sort(betas.begin(), betas.end());
      c.beta1 = betas.front();
      c.holds = c.beta1 <= c.k;
      if (c.beta1 == c.k) {
        c.equality_case = true;
        c.equality_holds = betas.back() == c.k;
        for (std::size_t a = 0; c.equality_holds && a < rest.size(); ++a) {
          for (std::size_t b = a + 1; c.equality_holds && b < rest.size(); ++b) {
            c.equality_holds = cs[rest[a]].intersect(cs[rest[b]]).is_subset_of(subgroup);
          }
        }
      }
      rep.lemma_checks.push_back(std::move(c));
    };
    std::vector<std::size_t> everyone(m);
    for (std::size_t i = 0; i < m; ++i) everyone[i] = i;
    check("Z", z, everyone);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::size_t> rest;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != i) rest.push_back(j);
      }
      check("C(" + std::to_string(set[i]) + ")", cs[i], rest);
    }
  }
  return rep;
}

PairwiseResult pairwise_intersection_is_center(CentStructure const& cent,
                                               ElementSet const& z) {
  auto const& cs = cent.centralizers();
  for (std::size_t a = 1; a < cs.size(); ++a) {
    for (std::size_t b = a + 1; b < cs.size(); ++b) {
      if (!(cs[a].intersect(cs[b]) == z)) {
        return {false, std::pair{cent.representative(a), cent.representative(b)}};
      }
    }
  }
  return {};
}

PairwiseResult pairwise_intersection_is_center(FiniteRing const& ring) {
  CommutationTable table(ring);
  return pairwise_intersection_is_center(cent_structure(table), center(table));
}

ProperCommutativityResult all_proper_centralizers_commutative(
    CommutationTable const& table, CentStructure const& cent) {
  auto const& cs = cent.centralizers();
  for (std::size_t a = 1; a < cs.size(); ++a) {
    auto const members = cs[a].elements();
    for (auto x : members) {
      for (auto y : members) {
        if (!table.commute(x, y)) {
          ProperCommutativityResult r;
          r.holds = false;
          r.centralizer_of = cent.representative(a);
          r.noncommuting = std::pair{x, y};
          return r;
        }
      }
    }
  }
  return {};
}

ProperCommutativityResult all_proper_centralizers_commutative(FiniteRing const& ring) {
  CommutationTable table(ring);
  return all_proper_centralizers_commutative(table, cent_structure(table));
}

std::optional<ContainingCentralizer> find_noncommutative_container(
    CentStructure const& cent, std::span<Element const> set) {
  auto const& cs = cent.centralizers();
  for (std::size_t a = 1; a < cs.size(); ++a) {
    auto const members = cs[a].elements();
    bool commutative = true;
    for (std::size_t i = 0; commutative && i < members.size(); ++i) {
      commutative = cs[a].is_subset_of(cent.of(members[i]));
    }
    if (commutative) continue;
    ContainingCentralizer found;
    found.centralizer_of = cent.representative(a);
    std::size_t hits = 0;
    for (auto r : set) {
      if (hits < 3 && cent.of(r).is_subset_of(cs[a])) found.members[hits++] = r;
    }
    if (hits == 3) return found;
  }
  return std::nullopt;
}

}  // namespace centlab

#include "centlab/centralizer.hpp"

#include <algorithm>
#include <unordered_map>

#include "centlab/error.hpp"

namespace centlab {

CommutationTable::CommutationTable(FiniteRing const& ring)
    : order_(ring.order()), words_((ring.order() + 63) / 64) {
  rows_.assign(std::size_t{order_} * words_, 0);
  auto set = [this](Element x, Element y) {
    rows_[std::size_t{x} * words_ + (y >> 6)] |= std::uint64_t{1} << (y & 63);
  };
  for (Element x = 0; x < order_; ++x) {
    set(x, x);
    for (Element y = x + 1; y < order_; ++y) {
      if (ring.commute(x, y)) {
        set(x, y);
        set(y, x);
      }
    }
  }
}

ElementSet CommutationTable::centralizer(Element x) const {
  auto r = row(x);
  return ElementSet::from_words(order_, {r.begin(), r.end()}, Closure::Subring);
}

CentStructure::CentStructure(std::vector<ElementSet> centralizers,
                             std::vector<std::uint32_t> assignment)
    : centralizers_(std::move(centralizers)), assignment_(std::move(assignment)) {
  reps_.assign(centralizers_.size(), 0);
  std::vector<bool> seen(centralizers_.size(), false);
  for (Element x = 0; x < assignment_.size(); ++x) {
    auto const pos = assignment_[x];
    if (!seen[pos]) {
      seen[pos] = true;
      reps_[pos] = x;
    }
  }
}

ElementSet center(CommutationTable const& table) {
  std::uint32_t const n = table.order();
  std::vector<std::uint64_t> words(table.row(0).begin(), table.row(0).end());
  for (Element x = 1; x < n; ++x) {
    auto r = table.row(x);
    for (std::size_t i = 0; i < words.size(); ++i) words[i] &= r[i];
  }
  return ElementSet::from_words(n, std::move(words), Closure::Subring);
}

ElementSet center(FiniteRing const& ring) {
  // Commuting with every generator is enough by bilinearity.
  std::size_t const k = ring.rank();
  return ElementSet::from_predicate(
      ring.order(),
      [&](Element x) {
        for (std::size_t i = 0; i < k; ++i) {
          if (!ring.commute(x, ring.group().generator(i))) return false;
        }
        return true;
      },
      Closure::Subring);
}

ElementSet centralizer(FiniteRing const& ring, Element x) {
  if (x >= ring.order()) {
    throw Error(ErrorKind::NotMember, "element " + std::to_string(x) + " not in ring");
  }
  return ElementSet::from_predicate(
      ring.order(), [&](Element y) { return ring.commute(x, y); }, Closure::Subring);
}

ElementSet centralizer_in(FiniteRing const& ring, ElementSet const& subring,
                          Element x) {
  if (!subring.contains(x)) {
    throw Error(ErrorKind::NotMember,
                "element " + std::to_string(x) + " is not a member of the subring");
  }
  return ElementSet::from_predicate(
      ring.order(),
      [&](Element y) { return subring.contains(y) && ring.commute(x, y); },
      subring.is_subring() ? Closure::Subring : Closure::None);
}

CentStructure cent_structure(CommutationTable const& table) {
  std::vector<ElementSet> distinct;
  std::vector<std::uint32_t> assignment(table.order());
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> index;
  for (Element x = 0; x < table.order(); ++x) {
    ElementSet c = table.centralizer(x);
    auto [it, inserted] = index.try_emplace(c, static_cast<std::uint32_t>(distinct.size()));
    if (inserted) distinct.push_back(std::move(c));
    assignment[x] = it->second;
  }
  return CentStructure(std::move(distinct), std::move(assignment));
}

CentStructure cent_structure(FiniteRing const& ring) {
  return cent_structure(CommutationTable(ring));
}

ElementSet require_subgroup(FiniteRing const& ring, ElementSet const& set) {
  if (set.universe() != ring.order()) {
    throw Error(ErrorKind::NotSubgroup, "set universe does not match ring order");
  }
  if (set.is_subgroup()) return set;
  auto const members = set.elements();
  bool ok = set.contains(0);
  for (std::size_t i = 0; ok && i < members.size(); ++i) {
    ok = set.contains(ring.neg(members[i]));
    for (std::size_t j = i; ok && j < members.size(); ++j) {
      ok = set.contains(ring.add(members[i], members[j]));
    }
  }
  if (!ok) throw Error(ErrorKind::NotSubgroup, "set is not an additive subgroup");
  return set.with_closure(Closure::Subgroup);
}

std::uint32_t additive_index(FiniteRing const& ring, ElementSet const& subgroup) {
  auto const s = require_subgroup(ring, subgroup);
  return ring.order() / s.size();
}

Invariants quotient_invariants(FiniteRing const& ring, ElementSet const& subgroup) {
  auto const s = require_subgroup(ring, subgroup);
  std::uint32_t const n = ring.order();
  std::vector<char> in_span(n, 0);
  std::vector<Element> span_members = s.elements();
  for (auto x : span_members) in_span[x] = 1;

  Invariants descending;
  while (span_members.size() < n) {
    Element best = 0;
    std::uint32_t best_order = 0;
    for (Element x = 0; x < n; ++x) {
      if (in_span[x]) continue;
      std::uint32_t m = 1;
      for (Element y = x; !in_span[y]; y = ring.add(y, x)) ++m;
      if (m > best_order) {
        best_order = m;
        best = x;
      }
    }
    descending.push_back(best_order);
    std::vector<Element> grown;
    grown.reserve(span_members.size() * best_order);
    Element shift = 0;
    for (std::uint32_t j = 0; j < best_order; ++j) {
      for (auto a : span_members) {
        Element const b = ring.add(a, shift);
        if (!in_span[b]) grown.push_back(b);
      }
      shift = ring.add(shift, best);
    }
    for (auto b : grown) in_span[b] = 1;
    span_members.insert(span_members.end(), grown.begin(), grown.end());
  }
  return {descending.rbegin(), descending.rend()};
}

bool is_quotient_cyclic(FiniteRing const& ring, ElementSet const& subgroup) {
  return quotient_invariants(ring, subgroup).size() <= 1;
}

bool is_commutative_subset(FiniteRing const& ring, ElementSet const& set) {
  auto const members = set.elements();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!ring.commute(members[i], members[j])) return false;
    }
  }
  return true;
}

}  // namespace centlab

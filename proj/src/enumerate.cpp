#include "centlab/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "centlab/canonical.hpp"
#include "centlab/error.hpp"
#include "centlab/parallel.hpp"

namespace centlab {

bool EnumCeiling::allows(Invariants const& invariants) const {
  std::uint64_t order = 1;
  for (auto d : invariants) order *= d;
  if (max_order) return order <= *max_order;
  if (order <= 8) return true;
  return (order == 9 || order == 16) && invariants.size() <= 2;
}

std::string EnumCeiling::describe() const {
  if (max_order) return "all additive types of order <= " + std::to_string(*max_order);
  return "all additive types of order <= 8; orders 9 and 16 with at most 2 generators";
}

EnumCeiling enum_ceiling_from_env() {
  char const* raw = std::getenv("CENTLAB_ENUM_CEILING");
  if (raw == nullptr || *raw == '\0') return {};
  char* end = nullptr;
  unsigned long const v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > kCanonicalMaxOrder) {
    throw Error(ErrorKind::BadParameter,
                "CENTLAB_ENUM_CEILING must be an integer in [1, " +
                    std::to_string(kCanonicalMaxOrder) + "]");
  }
  return EnumCeiling{static_cast<std::uint32_t>(v)};
}

namespace {

// Orderly depth-first search over structure-constant tables in row-major
// order. A partial table is kept only if every generator triple whose
// products are already determined associates, and no automorphism maps it
// to a lexicographically smaller table on the determined prefix.
class TableSearch {
 public:
  explicit TableSearch(Invariants const& invariants) : group_(invariants) {
    n_ = group_.order();
    k_ = group_.rank();
    positions_ = k_ * k_;
    exp_ = group_.exponent();
    coords_.resize(std::size_t{n_} * k_);
    for (Element x = 0; x < n_; ++x) {
      for (std::size_t i = 0; i < k_; ++i) coords_[x * k_ + i] = group_.coord(x, i);
    }
    add_.resize(std::size_t{n_} * n_);
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) add_[x * n_ + y] = group_.add(x, y);
    }
    scale_.resize(std::size_t{n_} * exp_);
    for (Element x = 0; x < n_; ++x) {
      for (std::uint32_t m = 0; m < exp_; ++m) scale_[x * exp_ + m] = group_.scale(x, m);
    }
    for (std::size_t i = 0; i < k_; ++i) gen_.push_back(group_.generator(i));
    auto const inv = group_.invariants();
    candidates_.resize(positions_);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        std::uint32_t const g = std::gcd(inv[i], inv[j]);
        for (Element x = 0; x < n_; ++x) {
          if (group_.scale(x, g) == 0) candidates_[i * k_ + j].push_back(x);
        }
      }
    }
    auto auts = additive_automorphisms(group_);
    // Skip the identity; it never produces a smaller image.
    for (std::size_t a = 1; a < auts.size(); ++a) {
      std::vector<Element> images(k_);
      for (std::size_t i = 0; i < k_; ++i) images[i] = auts[a].map[gen_[i]];
      aut_images_.push_back(std::move(images));
      aut_inverse_.push_back(std::move(auts[a].inverse));
    }
    table_.assign(positions_, 0);
  }

  std::size_t positions() const noexcept { return positions_; }

  // Completes the table from `prefix`; every surviving leaf is canonical.
  void complete(std::span<Element const> prefix,
                std::vector<std::vector<Element>>& out) {
    if (!load(prefix)) return;
    descend(prefix.size(), positions_, out);
  }

  // All viable partial tables of length `depth`.
  void prefixes(std::size_t depth, std::vector<std::vector<Element>>& out) {
    table_.assign(positions_, 0);
    descend(0, depth, out);
  }

 private:
  bool load(std::span<Element const> prefix) {
    for (std::size_t p = 0; p < prefix.size(); ++p) {
      table_[p] = prefix[p];
      if (!viable(p + 1)) return false;
    }
    return true;
  }

  void descend(std::size_t depth, std::size_t stop,
               std::vector<std::vector<Element>>& out) {
    if (depth == stop) {
      out.emplace_back(table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(stop));
      return;
    }
    for (Element c : candidates_[depth]) {
      table_[depth] = c;
      if (viable(depth + 1)) descend(depth + 1, stop, out);
    }
  }

  // Product using only the first `known` table entries; -1 if undetermined.
  std::int64_t partial_mul(Element x, Element y, std::size_t known) const {
    Element acc = 0;
    for (std::size_t a = 0; a < k_; ++a) {
      std::uint32_t const xa = coords_[x * k_ + a];
      if (xa == 0) continue;
      for (std::size_t b = 0; b < k_; ++b) {
        std::uint32_t const yb = coords_[y * k_ + b];
        if (yb == 0) continue;
        std::size_t const pos = a * k_ + b;
        if (pos >= known) return -1;
        Element const term = scale_[table_[pos] * exp_ + (xa * yb) % exp_];
        acc = add_[acc * n_ + term];
      }
    }
    return acc;
  }

  bool viable(std::size_t known) const {
    return associative_so_far(known) && minimal_so_far(known);
  }

  bool associative_so_far(std::size_t known) const {
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        std::size_t const ij = i * k_ + j;
        if (ij >= known) continue;
        for (std::size_t l = 0; l < k_; ++l) {
          std::size_t const jl = j * k_ + l;
          if (jl >= known) continue;
          auto const lhs = partial_mul(table_[ij], gen_[l], known);
          if (lhs < 0) continue;
          auto const rhs = partial_mul(gen_[i], table_[jl], known);
          if (rhs >= 0 && lhs != rhs) return false;
        }
      }
    }
    return true;
  }

  bool minimal_so_far(std::size_t known) const {
    for (std::size_t a = 0; a < aut_images_.size(); ++a) {
      auto const& img = aut_images_[a];
      auto const& inv = aut_inverse_[a];
      for (std::size_t q = 0; q < known; ++q) {
        auto const p = partial_mul(img[q / k_], img[q % k_], known);
        if (p < 0) break;
        Element const moved = inv[static_cast<Element>(p)];
        if (moved < table_[q]) return false;
        if (moved > table_[q]) break;
      }
    }
    return true;
  }

  AdditiveGroup group_;
  std::uint32_t n_ = 1;
  std::size_t k_ = 0;
  std::size_t positions_ = 0;
  std::uint32_t exp_ = 1;
  std::vector<std::uint32_t> coords_;
  std::vector<Element> add_;
  std::vector<Element> scale_;
  std::vector<Element> gen_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<std::vector<Element>> aut_images_;
  std::vector<std::vector<Element>> aut_inverse_;
  std::vector<Element> table_;
};

std::string type_tag(Invariants const& invariants) {
  return invariants.empty() ? "1" : join_invariants(invariants, 'x');
}

std::string seq_tag(std::size_t seq) {
  std::string s = std::to_string(seq);
  return std::string(s.size() < 4 ? 4 - s.size() : 0, '0') + s;
}

}  // namespace

std::vector<EnumTask> partition_tasks(Invariants const& invariants,
                                      std::size_t min_tasks) {
  TableSearch search(invariants);
  if (min_tasks <= 1 || search.positions() == 0) return {EnumTask{invariants, {}}};
  std::vector<std::vector<Element>> prefixes;
  for (std::size_t depth = 1; depth <= search.positions(); ++depth) {
    prefixes.clear();
    search.prefixes(depth, prefixes);
    if (prefixes.size() >= min_tasks) break;
  }
  std::vector<EnumTask> tasks;
  tasks.reserve(prefixes.size());
  for (auto& p : prefixes) tasks.push_back(EnumTask{invariants, std::move(p)});
  return tasks;
}

std::vector<FiniteRing> run_task(EnumTask const& task) {
  TableSearch search(task.invariants);
  std::vector<std::vector<Element>> tables;
  search.complete(task.prefix, tables);
  std::vector<FiniteRing> rings;
  rings.reserve(tables.size());
  for (auto& t : tables) {
    rings.push_back(validate_ring(AdditiveGroup(task.invariants), std::move(t)));
  }
  return rings;
}

std::vector<FiniteRing> enumerate_rings(Invariants const& invariants, unsigned workers,
                                        EnumCeiling const& ceiling) {
  AdditiveGroup const group(invariants);
  if (!ceiling.allows(invariants)) {
    throw Error(ErrorKind::CeilingExceeded,
                "additive type (" + join_invariants(invariants) +
                    ") is outside the enumeration ceiling (" + ceiling.describe() + ")");
  }
  workers = std::max(1u, workers);
  auto const tasks = partition_tasks(invariants, workers > 1 ? 4 * workers : 1);
  std::vector<std::vector<FiniteRing>> results(tasks.size());
  parallel_for(tasks.size(), workers, [&](std::size_t i) { results[i] = run_task(tasks[i]); });
  std::vector<FiniteRing> rings;
  std::string const prefix =
      "o" + std::to_string(group.order()) + "-" + type_tag(invariants) + "-";
  for (auto& batch : results) {
    for (auto& r : batch) {
      rings.push_back(r.with_label(prefix + seq_tag(rings.size() + 1)));
    }
  }
  return rings;
}

std::vector<FiniteRing> enumerate_order(std::uint32_t order, unsigned workers,
                                        EnumCeiling const& ceiling,
                                        std::vector<Invariants>* skipped) {
  std::vector<FiniteRing> rings;
  bool any = false;
  for (auto const& inv : abelian_groups_of_order(order)) {
    if (!ceiling.allows(inv)) {
      if (skipped) skipped->push_back(inv);
      continue;
    }
    any = true;
    auto batch = enumerate_rings(inv, workers, ceiling);
    rings.insert(rings.end(), std::make_move_iterator(batch.begin()),
                 std::make_move_iterator(batch.end()));
  }
  if (!any) {
    throw Error(ErrorKind::CeilingExceeded,
                "no additive type of order " + std::to_string(order) +
                    " is within the enumeration ceiling (" + ceiling.describe() + ")");
  }
  return rings;
}

}  // namespace centlab

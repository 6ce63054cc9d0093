#include "centlab/theorems.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "centlab/centralizer.hpp"
#include "centlab/error.hpp"
#include "centlab/parallel.hpp"

namespace centlab {

namespace {

constexpr std::array<TheoremInfo, 17> kRegistry{{
    {TheoremId::NonCyclic, "NONCYCLIC", "R is non-commutative",
     "the additive group R/Z(R) is not cyclic"},
    {TheoremId::No23, "NO-2-3", "always", "|Cent(R)| is neither 2 nor 3"},
    {TheoremId::T4Iff, "T4-IFF", "R is non-commutative",
     "|Cent(R)| = 4 exactly when |R:Z(R)| = 4 (both directions)"},
    {TheoremId::T5Iff, "T5-IFF", "R is non-commutative",
     "|Cent(R)| = 5 exactly when |R:Z(R)| = 9 (both directions)"},
    {TheoremId::TGe3, "P-TGE3", "R is non-commutative",
     "a maximum pairwise non-commuting set has t >= 3 elements"},
    {TheoremId::TPlus1, "P-TP1", "R is non-commutative", "t + 1 <= |Cent(R)|"},
    {TheoremId::CommCentLocal, "P-COMMCENT-LOCAL",
     "R is non-commutative and every proper centralizer is commutative",
     "for non-central a, b: C(a) = C(b) or C(a) n C(b) = Z(R)"},
    {TheoremId::Pairwise, "P-PAIRWISE", "R is non-commutative and t = |Cent(R)| - 1",
     "for non-central r, s: C(r) = C(s) or C(r) n C(s) = Z(R)"},
    {TheoremId::Comm48, "L-COMM-48", "|R:Z(R)| is 4 or 8",
     "C(x) is commutative for every non-central x"},
    {TheoremId::TMax4, "TMAX-4", "R is non-commutative",
     "|Cent(R)| = 4 exactly when t = 3 (both directions)"},
    {TheoremId::TMax5, "TMAX-5", "R is non-commutative",
     "|Cent(R)| = 5 exactly when t = 4 (both directions)"},
    {TheoremId::T6Index, "T6-INDEX", "|Cent(R)| = 6", "|R:Z(R)| is 8, 12 or 16"},
    {TheoremId::TZ2Cube, "T-Z2CUBE",
     "R is non-commutative and R/Z(R) has invariants (2,2,2)", "|Cent(R)| is 6 or 8"},
    {TheoremId::TPlus2, "L-TPLUS2", "R is non-commutative and |Cent(R)| = t + 2",
     "some proper non-commutative centralizer contains the centralizers of three "
     "members of the maximum set"},
    {TheoremId::L7NotPow2, "L7-NOT2POW", "|Cent(R)| = 7",
     "|R:Z(R)| is not a power of 2"},
    {TheoremId::T7Index, "T7-INDEX", "|Cent(R)| = 7", "|R:Z(R)| is 12, 18, 20, 24 or 25"},
    {TheoremId::Conv25, "CONV-25", "R is non-commutative and |R:Z(R)| = 25",
     "|Cent(R)| = 7 (observation only; never fails)", true},
}};

bool is_power_of_two(std::uint32_t x) { return x != 0 && (x & (x - 1)) == 0; }

bool one_of(std::uint64_t x, std::initializer_list<std::uint64_t> values) {
  return std::find(values.begin(), values.end(), x) != values.end();
}

std::string tuple_string(std::span<std::uint32_t const> v) {
  return "(" + join_invariants(v) + ")";
}

std::string elements_string(std::span<Element const> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::span<TheoremInfo const> theorem_registry() { return kRegistry; }

TheoremInfo const& theorem_info(TheoremId id) {
  return kRegistry[static_cast<std::size_t>(id)];
}

std::string_view theorem_name(TheoremId id) { return theorem_info(id).name; }

TheoremId parse_theorem_id(std::string_view name) {
  for (auto const& info : kRegistry) {
    if (info.name == name) return info.id;
  }
  throw Error(ErrorKind::UnknownTheoremId, "unknown theorem id '" + std::string(name) + "'");
}

std::vector<TheoremId> parse_theorem_list(std::string_view spec) {
  std::vector<TheoremId> ids;
  if (spec == "ALL") {
    for (auto const& info : kRegistry) ids.push_back(info.id);
    return ids;
  }
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto const comma = spec.find(',', pos);
    auto const item = spec.substr(pos, comma == std::string_view::npos ? spec.npos : comma - pos);
    auto const id = parse_theorem_id(item);
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ids;
}

RingFacts analyze(FiniteRing const& ring) {
  RingFacts f;
  f.label = ring.label();
  f.order = ring.order();
  f.additive.assign(ring.group().invariants().begin(), ring.group().invariants().end());
  CommutationTable const table(ring);
  auto const z = center(table);
  auto const cent = cent_structure(table);
  f.center_size = z.size();
  f.index = additive_index(ring, z);
  f.quotient = quotient_invariants(ring, z);
  f.n = cent.n();
  f.commutative = ring.is_commutative();
  f.unital = ring.identity().has_value();
  auto const clique = max_noncommuting_set(NoncommGraph(table));
  f.t = clique.t;
  f.clique = clique.witness;
  f.proper_commutative = all_proper_centralizers_commutative(table, cent);
  f.pairwise = pairwise_intersection_is_center(cent, z);
  f.container = find_noncommutative_container(cent, f.clique);
  f.cover = cover_report(ring, table, f.clique);
  return f;
}

std::vector<RingFacts> analyze_catalog(std::span<RingRecord const> catalog, unsigned workers) {
  std::vector<RingFacts> facts(catalog.size());
  parallel_for(catalog.size(), workers, [&](std::size_t i) {
    facts[i] = analyze(catalog[i].ring);
    facts[i].label = catalog[i].id;
  });
  return facts;
}

std::string render_analysis_tsv(std::span<RingFacts const> rows) {
  std::ostringstream os;
  os << "id\torder\tadditive\tcenter\tindex\tquotient\tn\tt\tunital\tcommutative\n";
  for (auto const& f : rows) {
    os << f.label << '\t' << f.order << '\t' << tuple_string(f.additive) << '\t'
       << f.center_size << '\t' << f.index << '\t' << tuple_string(f.quotient) << '\t' << f.n
       << '\t' << f.t << '\t' << (f.unital ? "true" : "false") << '\t'
       << (f.commutative ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Vacuous: return "VACUOUS";
    case Status::Fail: return "FAIL";
    case Status::Contra: return "CONTRA";
  }
  return "?";
}

TheoremVerdict verify(TheoremId id, RingFacts const& f) {
  TheoremVerdict v;
  v.id = id;
  v.label = f.label;
  bool const nc = !f.commutative;
  auto add = [&](std::string name, bool hyp, bool concl) {
    v.parts.push_back({std::move(name), hyp, concl});
  };
  auto w = [&](std::string key, std::string value) {
    v.witness.emplace_back(std::move(key), std::move(value));
  };
  auto const n = f.n, t = f.t;
  auto const index = f.index;

  switch (id) {
    case TheoremId::NonCyclic:
      add("non-commutative => R/Z not cyclic", nc, f.quotient.size() > 1);
      w("quotient", tuple_string(f.quotient));
      break;
    case TheoremId::No23:
      add("n not in {2,3}", true, n != 2 && n != 3);
      w("n", std::to_string(n));
      break;
    case TheoremId::T4Iff:
      add("n=4 => index=4", nc && n == 4, index == 4);
      add("index=4 => n=4", nc && index == 4, n == 4);
      w("n", std::to_string(n));
      w("index", std::to_string(index));
      break;
    case TheoremId::T5Iff:
      add("n=5 => index=9", nc && n == 5, index == 9);
      add("index=9 => n=5", nc && index == 9, n == 5);
      w("n", std::to_string(n));
      w("index", std::to_string(index));
      break;
    case TheoremId::TGe3:
      add("t >= 3", nc, t >= 3);
      w("t", std::to_string(t));
      w("clique", elements_string(f.clique));
      break;
    case TheoremId::TPlus1:
      add("t+1 <= n", nc, t + 1 <= n);
      w("t", std::to_string(t));
      w("n", std::to_string(n));
      break;
    case TheoremId::CommCentLocal:
      add("proper centralizers commutative => pairwise meets in Z",
          nc && f.proper_commutative.holds, f.pairwise.holds);
      if (f.pairwise.counterexample) {
        w("pair", std::to_string(f.pairwise.counterexample->first) + " " +
                      std::to_string(f.pairwise.counterexample->second));
      }
      break;
    case TheoremId::Pairwise:
      add("t = n-1 => pairwise meets in Z", nc && t + 1 == n, f.pairwise.holds);
      w("t", std::to_string(t));
      w("n", std::to_string(n));
      if (f.pairwise.counterexample) {
        w("pair", std::to_string(f.pairwise.counterexample->first) + " " +
                      std::to_string(f.pairwise.counterexample->second));
      }
      break;
    case TheoremId::Comm48:
      add("index in {4,8} => proper centralizers commutative", one_of(index, {4, 8}),
          f.proper_commutative.holds);
      w("index", std::to_string(index));
      if (f.proper_commutative.centralizer_of) {
        w("noncommutative_centralizer_of", std::to_string(*f.proper_commutative.centralizer_of));
      }
      break;
    case TheoremId::TMax4:
      add("n=4 => t=3", nc && n == 4, t == 3);
      add("t=3 => n=4", nc && t == 3, n == 4);
      w("n", std::to_string(n));
      w("t", std::to_string(t));
      break;
    case TheoremId::TMax5:
      add("n=5 => t=4", nc && n == 5, t == 4);
      add("t=4 => n=5", nc && t == 4, n == 5);
      w("n", std::to_string(n));
      w("t", std::to_string(t));
      break;
    case TheoremId::T6Index:
      add("n=6 => index in {8,12,16}", n == 6, one_of(index, {8, 12, 16}));
      w("n", std::to_string(n));
      w("index", std::to_string(index));
      break;
    case TheoremId::TZ2Cube:
      add("R/Z = (2,2,2) => n in {6,8}", nc && f.quotient == Invariants{2, 2, 2},
          n == 6 || n == 8);
      w("quotient", tuple_string(f.quotient));
      w("n", std::to_string(n));
      break;
    case TheoremId::TPlus2:
      add("n = t+2 => non-commutative centralizer contains three",
          nc && n == t + 2, f.container.has_value());
      w("n", std::to_string(n));
      w("t", std::to_string(t));
      if (f.container) {
        w("container_of", std::to_string(f.container->centralizer_of));
        w("members", elements_string(f.container->members));
      }
      break;
    case TheoremId::L7NotPow2:
      add("n=7 => index not a power of 2", n == 7, !is_power_of_two(index));
      w("n", std::to_string(n));
      w("index", std::to_string(index));
      break;
    case TheoremId::T7Index:
      add("n=7 => index in {12,18,20,24,25}", n == 7, one_of(index, {12, 18, 20, 24, 25}));
      w("n", std::to_string(n));
      w("index", std::to_string(index));
      break;
    case TheoremId::Conv25:
      add("index=25 => n=7", nc && index == 25, n == 7);
      w("n", std::to_string(n));
      w("index", std::to_string(index));
      break;
  }

  v.hypothesis_holds = std::any_of(v.parts.begin(), v.parts.end(),
                                   [](Implication const& p) { return p.hypothesis; });
  v.conclusion_holds = std::all_of(v.parts.begin(), v.parts.end(), [](Implication const& p) {
    return !p.hypothesis || p.conclusion;
  });
  if (!v.hypothesis_holds) {
    v.status = Status::Vacuous;
  } else if (v.conclusion_holds) {
    v.status = Status::Pass;
  } else {
    v.status = theorem_info(id).empirical ? Status::Contra : Status::Fail;
  }
  return v;
}

TheoremVerdict verify(TheoremId id, FiniteRing const& ring) {
  return verify(id, analyze(ring));
}

std::vector<std::string> cover_problems(RingFacts const& f) {
  std::vector<std::string> out;
  if (f.commutative) return out;
  auto const& c = f.cover;
  if (!c.covers) out.push_back("centralizers of the maximum set do not cover R");
  if (!c.intersection_is_center) out.push_back("intersection of the cover is not Z(R)");
  if (!c.irredundant) out.push_back("cover is redundant");
  if (c.alpha2.applicable && !c.alpha2.holds) {
    out.push_back("alpha2 = " + std::to_string(c.alpha2.value) + " exceeds " +
                  std::to_string(c.alpha2.bound));
  }
  if (c.index_bound.applicable && !c.index_bound.holds) {
    out.push_back("|R:D| = " + std::to_string(c.index_bound.value) + " violates " +
                  c.index_bound.rule);
  }
  for (auto const& l : c.lemma_checks) {
    if (!l.holds) {
      out.push_back("beta1 = " + std::to_string(l.beta1) + " > k = " + std::to_string(l.k) +
                    " with M = " + l.subgroup);
    }
    if (!l.equality_holds) {
      out.push_back("equality clause fails with M = " + l.subgroup);
    }
  }
  return out;
}

ScanSummary scan(std::span<RingRecord const> catalog, std::span<TheoremId const> ids,
                 ScanOptions const& options) {
  if (ids.empty()) throw Error(ErrorKind::BadParameter, "no theorem ids given");
  auto facts = analyze_catalog(catalog, options.workers);
  if (options.fault_hook) {
    for (auto& f : facts) options.fault_hook(f);
  }

  ScanSummary s;
  s.rings = catalog.size();
  s.ids.assign(ids.begin(), ids.end());
  for (auto id : ids) s.counts[id];
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    auto const& f = facts[i];
    ++s.provenance_counts[std::string(to_string(catalog[i].provenance))];
    ++s.n_histogram[f.n];
    ++s.index_histogram[f.index];
    if (one_of(f.index, {8, 12, 16}) && f.n != 6) ++s.converse_6[{f.index, f.n}];
    if (one_of(f.index, {12, 18, 20, 24, 25}) && f.n != 7) ++s.converse_7[{f.index, f.n}];
    if (!f.commutative) {
      ++s.covers_checked;
      for (auto& p : cover_problems(f)) s.cover_violations.push_back({f.label, std::move(p)});
    }
    for (auto id : ids) {
      auto v = verify(id, f);
      auto& c = s.counts[id];
      switch (v.status) {
        case Status::Pass: ++c.pass; break;
        case Status::Vacuous: ++c.vacuous; break;
        case Status::Fail: ++c.fail; break;
        case Status::Contra: ++c.contra; break;
      }
      if (v.hypothesis_holds) s.witnesses[id].push_back(f.label);
      if (v.status == Status::Fail) s.failures.push_back(std::move(v));
      else if (v.status == Status::Contra) s.contras.push_back(std::move(v));
    }
  }
  return s;
}

std::string render_verdict(TheoremVerdict const& v) {
  std::ostringstream os;
  os << to_string(v.status) << ' ' << theorem_name(v.id) << " ring=" << v.label;
  for (auto const& p : v.parts) {
    os << " [" << p.name << ": hyp=" << (p.hypothesis ? "yes" : "no");
    if (p.hypothesis) os << " concl=" << (p.conclusion ? "yes" : "no");
    os << ']';
  }
  for (auto const& [k, val] : v.witness) os << ' ' << k << '=' << val;
  return os.str();
}

std::string render_scan(ScanSummary const& s) {
  std::ostringstream os;
  std::size_t const fails = s.failures.size();
  os << "failures: " << fails << "\n";
  for (auto const& v : s.failures) os << "  " << render_verdict(v) << "\n";
  os << "cover suite: " << s.covers_checked << " non-commutative rings checked, "
     << s.cover_violations.size() << " violations\n";
  for (auto const& c : s.cover_violations) os << "  " << c.label << ": " << c.detail << "\n";

  os << "catalog: " << s.rings << " rings";
  for (auto const& [p, c] : s.provenance_counts) os << ", " << p << ' ' << c;
  os << "\n";

  os << "theorem             pass  vacuous  fail  contra\n";
  for (auto id : s.ids) {
    auto const& c = s.counts.at(id);
    std::string name(theorem_name(id));
    name.resize(18, ' ');
    char line[96];
    std::snprintf(line, sizeof line, "%s %6zu %8zu %5zu %7zu\n", name.c_str(), c.pass,
                  c.vacuous, c.fail, c.contra);
    os << line;
  }

  os << "hypotheses realized:\n";
  for (auto id : s.ids) {
    auto it = s.witnesses.find(id);
    os << "  " << theorem_name(id) << ": ";
    if (it == s.witnesses.end() || it->second.empty()) {
      os << "none (vacuous on this catalog)\n";
      continue;
    }
    os << it->second.size() << " ring(s):";
    std::size_t const shown = std::min<std::size_t>(it->second.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) os << ' ' << it->second[i];
    if (shown < it->second.size()) os << " ...";
    os << "\n";
  }

  os << "coverage |Cent(R)|:";
  for (auto const& [n, c] : s.n_histogram) os << ' ' << n << ':' << c;
  os << "\ncoverage |R:Z(R)|:";
  for (auto const& [i, c] : s.index_histogram) os << ' ' << i << ':' << c;
  os << "\n";

  os << "converse observations (index allowed for n=6, n != 6):";
  if (s.converse_6.empty()) os << " none";
  for (auto const& [key, c] : s.converse_6) {
    os << " index=" << key.first << ",n=" << key.second << " x" << c;
  }
  os << "\nconverse observations (index allowed for n=7, n != 7):";
  if (s.converse_7.empty()) os << " none";
  for (auto const& [key, c] : s.converse_7) {
    os << " index=" << key.first << ",n=" << key.second << " x" << c;
  }
  os << "\n";

  if (!s.contras.empty()) {
    os << "empirical contradictions:\n";
    for (auto const& v : s.contras) os << "  " << render_verdict(v) << "\n";
  }
  os << "result: " << (s.any_failure() ? "FAIL" : "PASS") << "\n";
  return os.str();
}

std::string render_registry() {
  std::ostringstream os;
  os << "# Theorem registry\n\n";
  os << "| id | hypothesis | conclusion | kind |\n";
  os << "|----|------------|------------|------|\n";
  for (auto const& info : kRegistry) {
    os << "| " << info.name << " | " << info.hypothesis << " | " << info.conclusion << " | "
       << (info.empirical ? "empirical" : "checked") << " |\n";
  }
  return os.str();
}

}  // namespace centlab

#include <doctest.h>

#include "catalogs.hpp"
#include "centlab/constructors.hpp"
#include "centlab/error.hpp"
#include "centlab/theorems.hpp"
#include "oracles.hpp"

using namespace centlab;

namespace {

// Bare facts with n and index forced in.
RingFacts synthetic(std::size_t n, std::uint32_t index, bool commutative = false) {
  RingFacts f;
  f.label = "synthetic";
  f.n = n;
  f.index = index;
  f.commutative = commutative;
  return f;
}

Status status(TheoremId id, RingFacts const& f) { return verify(id, f).status; }

}  // namespace

TEST_CASE("registry is closed and names parse back") {
  auto const reg = theorem_registry();
  CHECK(reg.size() == 17);
  for (auto const& info : reg) {
    CHECK(parse_theorem_id(info.name) == info.id);
    CHECK_FALSE(info.hypothesis.empty());
    CHECK_FALSE(info.conclusion.empty());
  }
  CHECK(parse_theorem_list("ALL").size() == 17);
  CHECK(parse_theorem_list("T4-IFF,NO-2-3,T4-IFF") ==
        std::vector<TheoremId>{TheoremId::T4Iff, TheoremId::No23});
  CHECK_THROWS_AS(parse_theorem_id("T8-INDEX"), Error);
  CHECK_THROWS_AS(parse_theorem_list("NO-2-3,"), Error);
}

TEST_CASE("analysis facts agree with the oracles") {
  for (auto const& r : {top_row_ring(2), top_row_ring(3), full_matrix_ring(2)}) {
    auto const f = analyze(r);
    auto const n = oracle::build(r);
    auto const z = oracle::center(n);
    CHECK(f.center_size == oracle::count(z));
    CHECK(f.index == r.order() / oracle::count(z));
    CHECK(f.n == oracle::cent_count(n));
    CHECK(f.t == oracle::max_clique(n).t);
    CHECK(f.quotient == oracle::quotient_invariants(n, z));
  }
}

TEST_CASE("documented verdicts") {
  CHECK(verify(TheoremId::T4Iff, top_row_ring(2)).status == Status::Pass);
  CHECK(verify(TheoremId::T6Index, cyclic_ring(4, 1)).status == Status::Vacuous);
  CHECK(verify(TheoremId::TZ2Cube, full_matrix_ring(2)).status == Status::Pass);
  CHECK(verify(TheoremId::T5Iff, top_row_ring(3)).status == Status::Pass);
  CHECK(verify(TheoremId::T7Index, top_row_ring(5)).status == Status::Pass);
  CHECK(verify(TheoremId::Conv25, top_row_ring(5)).status == Status::Pass);
}

TEST_CASE("scan of the order-4 classes") {
  auto const cat = testcat::enumerated({4});
  std::vector<TheoremId> ids{TheoremId::T4Iff, TheoremId::No23, TheoremId::NonCyclic};
  auto const s = scan(cat, ids);
  CHECK(s.rings == 11);
  CHECK(s.failures.empty());
  CHECK(s.counts.at(TheoremId::T4Iff).pass == 2);
  for (auto id : ids) CHECK(s.counts.at(id).total() == 11);
  CHECK(s.witnesses.at(TheoremId::T4Iff).size() == 2);
}

TEST_CASE("scan of the small witnesses") {
  std::vector<RingRecord> cat = make_records(
      {full_matrix_ring(2), top_row_ring(2), top_row_ring(3)}, Provenance::Constructed);
  auto const s = scan(cat, std::vector<TheoremId>{TheoremId::TGe3, TheoremId::TPlus1});
  CHECK(s.counts.at(TheoremId::TGe3).pass == 3);
  CHECK(s.counts.at(TheoremId::TPlus1).pass == 3);
  auto const facts = analyze_catalog(cat);
  CHECK(facts[0].t == 7);
  CHECK(facts[0].n == 8);
  CHECK(facts[1].t == 3);
  CHECK(facts[1].n == 4);
  CHECK(facts[2].t == 4);
  CHECK(facts[2].n == 5);
}

TEST_CASE("empty catalog gives zero counts") {
  std::vector<RingRecord> none;
  auto const s = scan(none, std::vector<TheoremId>{TheoremId::No23});
  CHECK(s.rings == 0);
  CHECK(s.counts.at(TheoremId::No23).total() == 0);
  CHECK_FALSE(s.any_failure());
  CHECK_THROWS_AS(scan(none, std::vector<TheoremId>{}), Error);
}

TEST_CASE("scan output does not depend on workers") {
  auto const cat = testcat::enumerated({8});
  auto ids = parse_theorem_list("ALL");
  auto const a = render_scan(scan(cat, ids, {1, {}}));
  auto const b = render_scan(scan(cat, ids, {4, {}}));
  CHECK(a == b);
}

TEST_CASE("forced facts make each checker fire") {
  // Hypothesis on, conclusion off, for every id.
  CHECK(status(TheoremId::No23, synthetic(2, 1, true)) == Status::Fail);
  CHECK(status(TheoremId::No23, synthetic(3, 4)) == Status::Fail);
  auto nc = synthetic(6, 4);
  nc.quotient = {4};
  CHECK(status(TheoremId::NonCyclic, nc) == Status::Fail);
  CHECK(status(TheoremId::T4Iff, synthetic(4, 16)) == Status::Fail);
  CHECK(status(TheoremId::T4Iff, synthetic(6, 4)) == Status::Fail);
  CHECK(status(TheoremId::T5Iff, synthetic(5, 25)) == Status::Fail);
  CHECK(status(TheoremId::T5Iff, synthetic(8, 9)) == Status::Fail);
  auto t2 = synthetic(4, 4);
  t2.t = 2;
  CHECK(status(TheoremId::TGe3, t2) == Status::Fail);
  auto big_t = synthetic(4, 4);
  big_t.t = 4;
  CHECK(status(TheoremId::TPlus1, big_t) == Status::Fail);
  CHECK(status(TheoremId::TMax4, big_t) == Status::Fail);
  auto t3 = synthetic(5, 9);
  t3.t = 3;
  CHECK(status(TheoremId::TMax4, t3) == Status::Fail);
  CHECK(status(TheoremId::TMax5, t3) == Status::Fail);
  auto local = synthetic(6, 8);
  local.pairwise.holds = false;
  local.t = 5;
  CHECK(status(TheoremId::CommCentLocal, local) == Status::Fail);
  CHECK(status(TheoremId::Pairwise, local) == Status::Fail);
  auto comm48 = synthetic(6, 8);
  comm48.proper_commutative.holds = false;
  CHECK(status(TheoremId::Comm48, comm48) == Status::Fail);
  CHECK(status(TheoremId::T6Index, synthetic(6, 10)) == Status::Fail);
  auto cube = synthetic(5, 8);
  cube.quotient = {2, 2, 2};
  CHECK(status(TheoremId::TZ2Cube, cube) == Status::Fail);
  auto plus2 = synthetic(6, 12);
  plus2.t = 4;
  CHECK(status(TheoremId::TPlus2, plus2) == Status::Fail);
  CHECK(status(TheoremId::L7NotPow2, synthetic(7, 16)) == Status::Fail);
  CHECK(status(TheoremId::T7Index, synthetic(7, 16)) == Status::Fail);
  CHECK(status(TheoremId::T7Index, synthetic(7, 10)) == Status::Fail);
  // The empirical statement never fails.
  CHECK(status(TheoremId::Conv25, synthetic(9, 25)) == Status::Contra);
}

TEST_CASE("fault hook on a real scan is reported with a nonzero outcome") {
  auto const cat = testcat::enumerated({4});
  ScanOptions opts;
  opts.fault_hook = [](RingFacts& f) {
    if (!f.commutative) f.n = 6;
  };
  auto const s = scan(cat, std::vector<TheoremId>{TheoremId::T4Iff, TheoremId::T6Index}, opts);
  CHECK(s.any_failure());
  CHECK(s.counts.at(TheoremId::T4Iff).fail == 2);
  CHECK(s.counts.at(TheoremId::T6Index).fail == 2);
  auto const text = render_scan(s);
  CHECK(text.rfind("failures: 4", 0) == 0);
  CHECK(text.find("result: FAIL") != std::string::npos);
}

TEST_CASE("verdict rendering carries the witness") {
  auto const v = verify(TheoremId::T6Index, synthetic(6, 10));
  auto const line = render_verdict(v);
  CHECK(line.rfind("FAIL T6-INDEX ring=synthetic", 0) == 0);
  CHECK(line.find("n=6") != std::string::npos);
  CHECK(line.find("index=10") != std::string::npos);
}

TEST_CASE("registry page lists every id") {
  auto const page = render_registry();
  for (auto const& info : theorem_registry()) CHECK(page.find(info.name) != std::string::npos);
}

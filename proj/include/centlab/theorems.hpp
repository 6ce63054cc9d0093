#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centlab/catalog.hpp"
#include "centlab/noncomm.hpp"
#include "centlab/ring.hpp"

namespace centlab {

enum class TheoremId {
  NonCyclic,       // NONCYCLIC
  No23,            // NO-2-3
  T4Iff,           // T4-IFF
  T5Iff,           // T5-IFF
  TGe3,            // P-TGE3
  TPlus1,          // P-TP1
  CommCentLocal,   // P-COMMCENT-LOCAL
  Pairwise,        // P-PAIRWISE
  Comm48,          // L-COMM-48
  TMax4,           // TMAX-4
  TMax5,           // TMAX-5
  T6Index,         // T6-INDEX
  TZ2Cube,         // T-Z2CUBE
  TPlus2,          // L-TPLUS2
  L7NotPow2,       // L7-NOT2POW
  T7Index,         // T7-INDEX
  Conv25,          // CONV-25
};

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  std::string_view hypothesis;
  std::string_view conclusion;
  // Empirical statements are observed, never failed.
  bool empirical = false;
};

std::span<TheoremInfo const> theorem_registry();
TheoremInfo const& theorem_info(TheoremId id);
std::string_view theorem_name(TheoremId id);
// Throws UnknownTheoremId.
TheoremId parse_theorem_id(std::string_view name);
// "ALL" or a comma-separated list.
std::vector<TheoremId> parse_theorem_list(std::string_view spec);

// Every quantity the checkers consume, computed once per ring. Checkers
// read only this record, which is what makes fault injection possible.
struct RingFacts {
  std::string label;
  std::uint32_t order = 1;
  Invariants additive;
  std::uint32_t center_size = 1;
  std::uint32_t index = 1;  // |R : Z(R)|
  Invariants quotient;      // invariants of R/Z(R)
  std::size_t n = 1;        // |Cent(R)|
  std::size_t t = 1;        // max pairwise non-commuting set
  std::vector<Element> clique;
  bool commutative = true;
  bool unital = false;
  ProperCommutativityResult proper_commutative;
  PairwiseResult pairwise;
  std::optional<ContainingCentralizer> container;
  CoverReport cover;
};

RingFacts analyze(FiniteRing const& ring);

// Facts for every record, in catalog order; label = record id.
std::vector<RingFacts> analyze_catalog(std::span<RingRecord const> catalog,
                                       unsigned workers = 1);

// Tab-separated analysis rows with a header line.
std::string render_analysis_tsv(std::span<RingFacts const> rows);

enum class Status { Pass, Vacuous, Fail, Contra };
std::string_view to_string(Status s);

// One implication "hypothesis => conclusion". Iff-statements have two.
struct Implication {
  std::string name;
  bool hypothesis = false;
  bool conclusion = true;
};

struct TheoremVerdict {
  TheoremId id{};
  std::string label;
  bool hypothesis_holds = false;
  bool conclusion_holds = true;
  Status status = Status::Vacuous;
  std::vector<Implication> parts;
  std::vector<std::pair<std::string, std::string>> witness;
};

TheoremVerdict verify(TheoremId id, RingFacts const& facts);
TheoremVerdict verify(TheoremId id, FiniteRing const& ring);

// Test hook: mutates the facts of every ring before checking.
using FaultHook = std::function<void(RingFacts&)>;

struct ScanOptions {
  unsigned workers = 1;
  FaultHook fault_hook;
};

struct StatusCounts {
  std::size_t pass = 0, vacuous = 0, fail = 0, contra = 0;
  std::size_t total() const { return pass + vacuous + fail + contra; }
};

struct CoverViolation {
  std::string label;
  std::string detail;
};

struct ScanSummary {
  std::size_t rings = 0;
  std::vector<TheoremId> ids;
  std::map<TheoremId, StatusCounts> counts;
  std::vector<TheoremVerdict> failures;  // FAIL verdicts in catalog order
  std::vector<TheoremVerdict> contras;   // empirical contradictions
  std::map<TheoremId, std::vector<std::string>> witnesses;  // hypothesis held
  std::map<std::string, std::size_t> provenance_counts;
  std::map<std::size_t, std::size_t> n_histogram;
  std::map<std::uint32_t, std::size_t> index_histogram;
  // (index, n) pairs of rings whose index is allowed by the 6- or
  // 7-centralizer restrictions but whose n is not 6 or 7 respectively.
  std::map<std::pair<std::uint32_t, std::size_t>, std::size_t> converse_6;
  std::map<std::pair<std::uint32_t, std::size_t>, std::size_t> converse_7;
  std::size_t covers_checked = 0;
  std::vector<CoverViolation> cover_violations;

  bool any_failure() const { return !failures.empty() || !cover_violations.empty(); }
};

ScanSummary scan(std::span<RingRecord const> catalog, std::span<TheoremId const> ids,
                 ScanOptions const& options = {});

std::string render_scan(ScanSummary const& summary);
std::string render_verdict(TheoremVerdict const& v);
std::string render_registry();

// Cover-suite problems for one ring's maximum clique, empty if none.
std::vector<std::string> cover_problems(RingFacts const& facts);

}  // namespace centlab

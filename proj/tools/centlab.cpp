// centlab: enumerate, analyze and check finite rings from the command line.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "centlab/abelian_group.hpp"
#include "centlab/catalog.hpp"
#include "centlab/constructors.hpp"
#include "centlab/enumerate.hpp"
#include "centlab/error.hpp"
#include "centlab/noncomm.hpp"
#include "centlab/theorems.hpp"

using namespace centlab;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Everything goes through one writer: a file if given, stdout otherwise.
void emit(std::string const& out, std::string const& text) {
  if (out.empty() || out == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
  } else {
    write_text_file(out, text);
  }
}

Invariants parse_invariant_list(std::string const& text) {
  Invariants v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      unsigned long d = std::stoul(item, &used);
      if (used != item.size() || d < 2) throw std::invalid_argument(item);
      v.push_back(static_cast<std::uint32_t>(d));
    } catch (std::logic_error const&) {
      throw Error(ErrorKind::BadParameter, "bad additive list '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (!is_invariant_chain(v)) {
    throw Error(ErrorKind::BadParameter,
                "additive list '" + text + "' is not an invariant-factor chain d1 | d2 | ...");
  }
  return v;
}

EnumCeiling ceiling_with_warning() {
  auto c = enum_ceiling_from_env();
  if (c.max_order) {
    std::cerr << "warning: CENTLAB_ENUM_CEILING overrides the default ceiling (" << c.describe()
              << "); larger runs are not part of the exhaustive default catalogs\n";
  }
  return c;
}

std::string clique_line(CliqueResult const& r) {
  std::string s = "t = " + std::to_string(r.t) + "; witness:";
  for (auto x : r.witness) s += " " + std::to_string(x);
  return s;
}

struct Args {
  unsigned workers = 1;
  std::string out;

  std::uint32_t order = 0;
  std::string additive;

  std::string catalog;
  std::string format = "tsv";

  std::string ring;

  std::string theorems = "ALL";

  std::string name;
  std::uint32_t n = 0, c = 1, p = 2, m = 2;
  std::string left, right;
};

int run_enumerate(Args const& a) {
  auto const ceiling = ceiling_with_warning();
  std::vector<FiniteRing> rings;
  if (!a.additive.empty()) {
    auto inv = parse_invariant_list(a.additive);
    std::uint64_t prod = 1;
    for (auto d : inv) prod *= d;
    if (prod != a.order) {
      throw Error(ErrorKind::BadParameter, "--additive does not have order " +
                                               std::to_string(a.order));
    }
    rings = enumerate_rings(inv, a.workers, ceiling);
  } else {
    std::vector<Invariants> skipped;
    rings = enumerate_order(a.order, a.workers, ceiling, &skipped);
    for (auto const& s : skipped) {
      std::cerr << "warning: additive type (" << join_invariants(s)
                << ") skipped: outside the enumeration ceiling\n";
    }
  }
  std::size_t nc = 0;
  for (auto const& r : rings) nc += !r.is_commutative();
  auto records = make_records(std::move(rings), Provenance::Enumerated);
  emit(a.out, serialize_catalog(records));
  std::cerr << records.size() << " rings, " << nc << " non-commutative\n";
  return kOk;
}

int run_analyze(Args const& a) {
  if (a.format != "tsv") throw Error(ErrorKind::BadParameter, "unknown format " + a.format);
  auto records = read_catalog_file(a.catalog);
  auto facts = analyze_catalog(records, a.workers);
  emit(a.out, render_analysis_tsv(facts));
  return kOk;
}

int run_clique(Args const& a) {
  std::string text;
  if (!a.ring.empty()) {
    text = clique_line(max_noncommuting_set(read_ring_file(a.ring))) + "\n";
  } else {
    auto records = read_catalog_file(a.catalog);
    for (auto const& r : records) {
      text += r.id + ": " + clique_line(max_noncommuting_set(r.ring)) + "\n";
    }
  }
  emit(a.out, text);
  return kOk;
}

int run_verify(Args const& a) {
  auto ids = parse_theorem_list(a.theorems);
  auto records = read_catalog_file(a.catalog);
  auto summary = scan(records, ids, ScanOptions{a.workers, {}});
  emit(a.out, render_scan(summary));
  return summary.any_failure() ? kFail : kOk;
}

int run_construct(Args const& a) {
  FiniteRing r;
  if (a.name == "zero") {
    r = zero_ring(a.additive.empty() ? Invariants{} : parse_invariant_list(a.additive));
  } else if (a.name == "cyclic") {
    r = cyclic_ring(a.n, a.c);
  } else if (a.name == "toprow") {
    r = top_row_ring(a.p);
  } else if (a.name == "matrix") {
    r = full_matrix_ring(a.m);
  } else if (a.name == "upper") {
    r = upper_triangular_ring(a.m);
  } else if (a.name == "product") {
    if (a.left.empty() || a.right.empty()) {
      throw Error(ErrorKind::BadParameter, "product needs --left and --right");
    }
    r = direct_product(read_ring_file(a.left), read_ring_file(a.right));
  } else if (a.name == "opposite") {
    if (a.ring.empty()) throw Error(ErrorKind::BadParameter, "opposite needs --ring");
    r = opposite_ring(read_ring_file(a.ring));
  }
  emit(a.out, serialize_ring(r));
  return kOk;
}

int run_witnesses(Args const& a) {
  emit(a.out, serialize_catalog(make_records(witness_rings(), Provenance::Constructed)));
  return kOk;
}

int run_theorems(Args const& a) {
  emit(a.out, render_registry());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"centlab: finite rings, centralizers and non-commuting sets"};
  app.require_subcommand(1);
  Args a;

  auto workers = [&](CLI::App* sub) {
    sub->add_option("--workers", a.workers, "worker threads (output does not depend on it)")
        ->check(CLI::Range(1u, 256u));
  };
  auto out = [&](CLI::App* sub) { sub->add_option("--out", a.out, "output file (default stdout)"); };

  auto* en = app.add_subcommand("enumerate", "all rings of an order, up to isomorphism");
  en->add_option("--order", a.order)->required()->check(CLI::Range(1u, 256u));
  en->add_option("--additive", a.additive, "restrict to one additive type, e.g. 2,4");
  out(en);
  workers(en);

  auto* an = app.add_subcommand("analyze", "per-ring invariants of a catalog");
  an->add_option("catalog", a.catalog)->required()->check(CLI::ExistingFile);
  an->add_option("--format", a.format)->check(CLI::IsMember({"tsv"}));
  out(an);
  workers(an);

  auto* cl = app.add_subcommand("clique", "maximum pairwise non-commuting set");
  auto* cl_ring = cl->add_option("--ring", a.ring)->check(CLI::ExistingFile);
  auto* cl_cat = cl->add_option("--catalog", a.catalog)->check(CLI::ExistingFile);
  cl_ring->excludes(cl_cat);
  cl->require_option(1);
  out(cl);

  auto* ve = app.add_subcommand("verify", "run theorem checks over a catalog");
  ve->add_option("--theorems", a.theorems, "comma-separated ids or ALL");
  ve->add_option("--catalog", a.catalog)->required()->check(CLI::ExistingFile);
  out(ve);
  workers(ve);

  auto* co = app.add_subcommand("construct", "write a named ring");
  co->add_option("--name", a.name)
      ->required()
      ->check(CLI::IsMember({"zero", "cyclic", "toprow", "matrix", "upper", "product", "opposite"}));
  co->add_option("--additive", a.additive, "zero: invariants, e.g. 2,2");
  co->add_option("--n", a.n, "cyclic: modulus");
  co->add_option("--c", a.c, "cyclic: e1*e1 = c*e1");
  co->add_option("--p", a.p, "toprow: prime");
  co->add_option("--m", a.m, "matrix, upper: modulus");
  co->add_option("--left", a.left, "product: left factor")->check(CLI::ExistingFile);
  co->add_option("--right", a.right, "product: right factor")->check(CLI::ExistingFile);
  co->add_option("--ring", a.ring, "opposite: ring file")->check(CLI::ExistingFile);
  out(co);

  auto* wi = app.add_subcommand("witnesses", "catalog of constructed witness rings");
  out(wi);
  auto* th = app.add_subcommand("theorems", "theorem registry as markdown");
  out(th);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (en->parsed()) return run_enumerate(a);
    if (an->parsed()) return run_analyze(a);
    if (cl->parsed()) return run_clique(a);
    if (ve->parsed()) return run_verify(a);
    if (co->parsed()) return run_construct(a);
    if (wi->parsed()) return run_witnesses(a);
    if (th->parsed()) return run_theorems(a);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what();
    if (!e.witness().empty()) {
      std::cerr << " [" << to_string(e.kind()) << ":";
      for (auto w : e.witness()) std::cerr << ' ' << w;
      std::cerr << ']';
    }
    std::cerr << '\n';
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

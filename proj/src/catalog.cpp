#include "centlab/catalog.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "centlab/canonical.hpp"
#include "centlab/constructors.hpp"
#include "centlab/error.hpp"

namespace centlab {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Enumerated: return "enumerated";
    case Provenance::Constructed: return "constructed";
    case Provenance::User: return "user";
  }
  return "user";
}

Provenance parse_provenance(std::string_view text) {
  if (text == "enumerated") return Provenance::Enumerated;
  if (text == "constructed") return Provenance::Constructed;
  if (text == "user") return Provenance::User;
  throw Error(ErrorKind::SyntaxError, "unknown provenance '" + std::string(text) + "'");
}

namespace {

struct Line {
  std::size_t number;  // 1-based, relative to the whole input
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  auto const b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto const e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Line> split_lines(std::string_view text, std::size_t first_line = 1) {
  std::vector<Line> lines;
  std::size_t pos = 0, number = first_line;
  while (pos <= text.size()) {
    auto const nl = text.find('\n', pos);
    auto const end = nl == std::string_view::npos ? text.size() : nl;
    lines.push_back({number++, text.substr(pos, end - pos)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

[[noreturn]] void syntax_error(Line const& line, std::size_t column, std::string const& msg) {
  throw Error(ErrorKind::SyntaxError,
              "line " + std::to_string(line.number) + ", column " + std::to_string(column) +
                  ": " + msg,
              {line.number, column});
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokens(Line const& line, std::size_t from) {
  std::vector<Token> out;
  std::string_view const s = line.text;
  std::size_t i = from;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    out.push_back({s.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

std::uint32_t to_uint(Line const& line, Token const& tok) {
  std::uint32_t v = 0;
  auto const* b = tok.text.data();
  auto const* e = b + tok.text.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || ptr != e) {
    syntax_error(line, tok.column, "expected a non-negative integer, got '" +
                                       std::string(tok.text) + "'");
  }
  return v;
}

bool starts_with(std::string_view s, std::string_view p) {
  return s.substr(0, p.size()) == p;
}

bool is_ignorable(std::string_view t) { return t.empty() || t.front() == '#'; }

FiniteRing parse_ring_lines(std::span<Line const> lines, std::string default_name) {
  std::size_t i = 0;
  while (i < lines.size() && is_ignorable(trim(lines[i].text))) ++i;
  if (i == lines.size()) {
    throw Error(ErrorKind::SyntaxError, "missing 'ring v1' header",
                {lines.empty() ? 1 : lines.back().number, 1});
  }
  if (trim(lines[i].text) != "ring v1") {
    syntax_error(lines[i], 1, "expected 'ring v1'");
  }
  ++i;
  std::string name = std::move(default_name);
  std::optional<AdditiveGroup> group;
  std::vector<Element> sc;
  std::vector<bool> seen;
  for (; i < lines.size(); ++i) {
    Line const& line = lines[i];
    std::string_view const t = trim(line.text);
    if (is_ignorable(t)) continue;
    std::size_t const indent = line.text.find_first_not_of(" \t");
    if (starts_with(t, "name:")) {
      name = std::string(trim(t.substr(5)));
    } else if (starts_with(t, "additive:")) {
      if (group) syntax_error(line, indent + 1, "duplicate 'additive:' line");
      Invariants inv;
      auto toks = tokens(line, indent + 9);
      for (auto const& tok : toks) inv.push_back(to_uint(line, tok));
      if (!is_invariant_chain(inv)) {
        syntax_error(line, indent + 10,
                     "invariants must be >= 2 with each dividing the next");
      }
      try {
        group.emplace(std::move(inv));
      } catch (Error const& e) {
        syntax_error(line, indent + 10, e.what());
      }
      sc.assign(group->rank() * group->rank(), 0);
      seen.assign(sc.size(), false);
    } else if (starts_with(t, "sc ")) {
      if (!group) syntax_error(line, indent + 1, "'sc' line before 'additive:'");
      auto const colon = line.text.find(':');
      if (colon == std::string_view::npos) syntax_error(line, indent + 1, "missing ':'");
      Line head{line.number, line.text.substr(0, colon)};
      auto idx = tokens(head, indent + 2);
      if (idx.size() != 2) syntax_error(line, indent + 4, "expected 'sc i j:'");
      std::size_t const k = group->rank();
      std::uint32_t const gi = to_uint(line, idx[0]);
      std::uint32_t const gj = to_uint(line, idx[1]);
      if (gi < 1 || gi > k) syntax_error(line, idx[0].column, "generator index out of range");
      if (gj < 1 || gj > k) syntax_error(line, idx[1].column, "generator index out of range");
      auto coords_tok = tokens(line, colon + 1);
      if (coords_tok.size() != k) {
        syntax_error(line, colon + 2,
                     "expected " + std::to_string(k) + " coordinates, got " +
                         std::to_string(coords_tok.size()));
      }
      std::vector<std::uint32_t> coords;
      for (std::size_t c = 0; c < k; ++c) {
        std::uint32_t const v = to_uint(line, coords_tok[c]);
        if (v >= group->invariants()[c]) {
          syntax_error(line, coords_tok[c].column,
                       "coordinate " + std::to_string(v) + " out of range for Z" +
                           std::to_string(group->invariants()[c]));
        }
        coords.push_back(v);
      }
      std::size_t const pos = (gi - 1) * k + (gj - 1);
      if (seen[pos]) syntax_error(line, indent + 1, "duplicate sc entry");
      seen[pos] = true;
      sc[pos] = group->encode(coords);
    } else {
      syntax_error(line, indent + 1, "unrecognised line '" + std::string(t) + "'");
    }
  }
  if (!group) {
    throw Error(ErrorKind::SyntaxError, "missing 'additive:' line",
                {lines.back().number, 1});
  }
  for (std::size_t p = 0; p < seen.size(); ++p) {
    if (!seen[p]) {
      std::size_t const k = group->rank();
      throw Error(ErrorKind::SyntaxError,
                  "missing line 'sc " + std::to_string(p / k + 1) + " " +
                      std::to_string(p % k + 1) + ":'",
                  {lines.back().number, 1});
    }
  }
  try {
    return validate_ring(std::move(*group), std::move(sc), std::move(name));
  } catch (Error const& e) {
    std::size_t const at = lines.empty() ? 1 : lines.front().number;
    throw Error(ErrorKind::ValidationError,
                "ring starting at line " + std::to_string(at) + ": " +
                    std::string(to_string(e.kind())) + ": " + e.what(),
                e.witness());
  }
}

void append_ring_body(std::ostringstream& os, FiniteRing const& ring, bool with_name) {
  os << "ring v1\n";
  if (with_name && !ring.label().empty()) os << "name: " << ring.label() << "\n";
  os << "additive:";
  for (auto d : ring.group().invariants()) os << ' ' << d;
  os << "\n";
  std::size_t const k = ring.rank();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      os << "sc " << i + 1 << ' ' << j + 1 << ':';
      for (auto c : ring.group().decode(ring.sc(i, j))) os << ' ' << c;
      os << "\n";
    }
  }
}

}  // namespace

std::string serialize_ring(FiniteRing const& ring) {
  std::ostringstream os;
  append_ring_body(os, ring, true);
  return os.str();
}

FiniteRing parse_ring(std::string_view text) {
  auto const lines = split_lines(text);
  return parse_ring_lines(lines, {});
}

std::string serialize_catalog(std::span<RingRecord const> records) {
  std::ostringstream os;
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (r) os << "---\n";
    auto const& rec = records[r];
    os << "id: " << rec.id << "\n";
    os << "provenance: " << to_string(rec.provenance) << "\n";
    append_ring_body(os, rec.ring, rec.ring.label() != rec.id);
  }
  return os.str();
}

std::vector<RingRecord> parse_catalog(std::string_view text) {
  auto const lines = split_lines(text);
  std::vector<RingRecord> out;
  std::vector<Line> block;
  auto flush = [&] {
    bool meaningful = false;
    for (auto const& l : block) meaningful = meaningful || !is_ignorable(trim(l.text));
    if (!meaningful) {
      block.clear();
      return;
    }
    RingRecord rec;
    bool have_id = false;
    std::size_t body = 0;
    for (; body < block.size(); ++body) {
      std::string_view const t = trim(block[body].text);
      if (is_ignorable(t)) continue;
      if (starts_with(t, "id:")) {
        rec.id = std::string(trim(t.substr(3)));
        have_id = !rec.id.empty();
      } else if (starts_with(t, "provenance:")) {
        try {
          rec.provenance = parse_provenance(trim(t.substr(11)));
        } catch (Error const&) {
          syntax_error(block[body], 1, "unknown provenance");
        }
      } else {
        break;
      }
    }
    if (!have_id) syntax_error(block.front(), 1, "record without 'id:' line");
    std::span<Line const> rest(block.data() + body, block.size() - body);
    try {
      rec.ring = parse_ring_lines(rest, rec.id);
    } catch (Error const& e) {
      throw Error(e.kind(), "record '" + rec.id + "': " + e.what(), e.witness());
    }
    out.push_back(std::move(rec));
    block.clear();
  };
  for (auto const& line : lines) {
    if (trim(line.text) == "---") {
      flush();
    } else {
      block.push_back(line);
    }
  }
  flush();
  return out;
}

FiniteRing read_ring_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::SyntaxError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ring(ss.str());
}

std::vector<RingRecord> read_catalog_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::SyntaxError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

void write_text_file(std::filesystem::path const& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::BadParameter, "cannot write " + path.string());
  out << text;
}

std::vector<RingRecord> make_records(std::vector<FiniteRing> rings, Provenance provenance) {
  std::vector<RingRecord> out;
  out.reserve(rings.size());
  for (auto& r : rings) {
    std::string id = r.label();
    out.push_back({std::move(id), std::move(r), provenance});
  }
  return out;
}

std::vector<RingRecord> dedupe_by_canonical_form(std::span<RingRecord const> records) {
  std::map<std::pair<Invariants, std::vector<Element>>, bool> seen;
  std::vector<RingRecord> out;
  for (auto const& rec : records) {
    auto const& g = rec.ring.group();
    Invariants inv(g.invariants().begin(), g.invariants().end());
    std::vector<Element> key;
    if (rec.ring.order() <= kCanonicalMaxOrder) {
      auto const c = canonicalize(rec.ring);
      key.assign(c.table().begin(), c.table().end());
    } else {
      key.assign(rec.ring.table().begin(), rec.ring.table().end());
    }
    if (seen.emplace(std::pair{std::move(inv), std::move(key)}, true).second) {
      out.push_back(rec);
    }
  }
  return out;
}

std::vector<FiniteRing> witness_rings() {
  auto const e2 = top_row_ring(2);
  auto const e3 = top_row_ring(3);
  auto const m2 = full_matrix_ring(2);
  auto const z2 = cyclic_ring(2, 1);
  auto const z3 = cyclic_ring(3, 1);
  return {
      e2,
      e3,
      top_row_ring(5),
      top_row_ring(7),
      opposite_ring(e2),
      opposite_ring(e3),
      m2,
      full_matrix_ring(3),
      upper_triangular_ring(2),
      upper_triangular_ring(3),
      upper_triangular_ring(4),
      direct_product(e2, z2),
      direct_product(e2, z3),
      direct_product(e3, z2),
      direct_product(e2, e2),
      direct_product(e2, opposite_ring(e2)),
      direct_product(m2, z2),
  };
}

}  // namespace centlab

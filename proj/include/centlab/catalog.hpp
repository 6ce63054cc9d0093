#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "centlab/ring.hpp"

namespace centlab {

enum class Provenance { Enumerated, Constructed, User };

std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

struct RingRecord {
  std::string id;
  FiniteRing ring;
  Provenance provenance = Provenance::User;
};

// Ring text format:
//
//   ring v1
//   name: E2                 (optional)
//   additive: 2 2
//   sc 1 1: 1 0              (k^2 lines, 1-based generator indices,
//   ...                       coordinates in additive-invariant order)
//
// Blank lines and lines starting with '#' are ignored. Parse errors carry
// 1-based (line, column) in Error::witness().
std::string serialize_ring(FiniteRing const& ring);
FiniteRing parse_ring(std::string_view text);

// Catalog: records separated by a line "---"; each record is "id: ...",
// optionally "provenance: ...", then a ring block.
std::string serialize_catalog(std::span<RingRecord const> records);
std::vector<RingRecord> parse_catalog(std::string_view text);

FiniteRing read_ring_file(std::filesystem::path const& path);
std::vector<RingRecord> read_catalog_file(std::filesystem::path const& path);
void write_text_file(std::filesystem::path const& path, std::string_view text);

// Records whose id is the ring label.
std::vector<RingRecord> make_records(std::vector<FiniteRing> rings, Provenance provenance);

// Keeps the first record of every isomorphism class (orders <= 16; larger
// rings are kept unless their tables are identical to an earlier one).
std::vector<RingRecord> dedupe_by_canonical_form(std::span<RingRecord const> records);

// Constructed witness rings: top-row rings, matrix and triangular rings,
// opposites and a few products.
std::vector<FiniteRing> witness_rings();

}  // namespace centlab

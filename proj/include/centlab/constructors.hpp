#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "centlab/ring.hpp"

namespace centlab {

// Named rings used as witnesses and catalog samples.

FiniteRing zero_ring(Invariants invariants);

// Z_n with e1 * e1 = c * e1.
FiniteRing cyclic_ring(std::uint32_t n, std::uint32_t c);

// E_p: 2x2 matrices over F_p with zero second row (generators E11, E12).
FiniteRing top_row_ring(std::uint32_t p);

// M_2(Z_m), generators E11, E12, E21, E22.
FiniteRing full_matrix_ring(std::uint32_t m);

// Upper triangular 2x2 matrices over Z_m, generators E11, E12, E22.
FiniteRing upper_triangular_ring(std::uint32_t m);

FiniteRing direct_product(FiniteRing const& a, FiniteRing const& b);

// Same additive group, x o y := y x.
FiniteRing opposite_ring(FiniteRing const& a);

inline constexpr std::uint32_t kMaxProductOrder = 4096;

// Builds a ring on Z_{m1} x ... x Z_{mr} (arbitrary moduli, mixed-radix
// indices with m1 fastest) from an element-level product, rewriting the
// group into invariant-factor form. Throws like validate_ring.
FiniteRing ring_from_products(std::span<std::uint32_t const> moduli,
                              std::function<std::uint32_t(std::uint32_t, std::uint32_t)> const& mul,
                              std::string label = {});

}  // namespace centlab

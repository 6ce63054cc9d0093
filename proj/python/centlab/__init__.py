"""Finite rings given by structure constants: centralizers, enumeration,
non-commuting sets and theorem checks."""

from ._core import (
    CentlabError,
    Ring,
    analyze,
    center,
    cent_count,
    cyclic_ring,
    direct_product,
    enumerate_order,
    enumerate_rings,
    full_matrix_ring,
    max_noncommuting_set,
    opposite_ring,
    parse_catalog,
    parse_ring,
    quotient_invariants,
    scan,
    serialize_catalog,
    serialize_ring,
    theorem_ids,
    top_row_ring,
    upper_triangular_ring,
    validate_ring,
    verify,
    witness_rings,
    zero_ring,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Hard-coded example lattices and connections.

``SG`` is the subgroup lattice of Z_p x Z_{q^2} (p != q primes) and
``SGprime`` the subgroup lattice of Z_2 x Z_4, both with the element names
used throughout the test suite.
"""
from __future__ import annotations

from functools import lru_cache

from lattika.galois import GaloisConnection, MonotoneMap, connect, from_label_tables
from lattika.lattice import Lattice, from_covers

SG_LABELS = ("0", "H1", "H2", "H3", "H4", "G")
SG_COVERS = [("0", "H1"), ("0", "H2"), ("H1", "H3"), ("H1", "H4"), ("H2", "H4"), ("H3", "G"), ("H4", "G")]

SGP_LABELS = ("0'", "H1'", "H2'", "H3'", "H4'", "H5'", "H6'", "G'")
SGP_COVERS = [
    ("0'", "H1'"), ("0'", "H2'"), ("0'", "H3'"),
    ("H1'", "H4'"), ("H2'", "H4'"), ("H3'", "H4'"),
    ("H3'", "H5'"), ("H3'", "H6'"),
    ("H4'", "G'"), ("H5'", "G'"), ("H6'", "G'"),
]  # fmt: skip


def _build(labels, covers) -> Lattice:
    idx = {lab: i for i, lab in enumerate(labels)}
    return from_covers(len(labels), [(idx[a], idx[b]) for a, b in covers], labels)


@lru_cache(maxsize=None)
def SG() -> Lattice:
    return _build(SG_LABELS, SG_COVERS)


@lru_cache(maxsize=None)
def SGprime() -> Lattice:
    return _build(SGP_LABELS, SGP_COVERS)


FIXTURES = {"SG": SG, "SGprime": SGprime}

# Example connections as label tables; unlisted elements are fixed.
EXAMPLE1_ALPHA = {"0": "0", "H1": "0", "H2": "H3", "H4": "H3", "H3": "H2", "G": "G"}
EXAMPLE1_BETA = {"0": "H1", "H1": "H1", "H2": "H3", "H4": "H3", "H3": "H4", "G": "G"}

EXAMPLE2_ALPHA = {"H2": "H4", "H3": "G"}
EXAMPLE2_BETA = {"H2": "0", "H3": "H1"}

# As printed these two tables are not order-preserving on SGprime
# (H2' <= H4' but alpha(H2') = H2' is not below alpha(H4') = H1').
EXAMPLE3_ALPHA_LITERAL = {"H3'": "0'", "H4'": "H1'"}
EXAMPLE3_BETA_LITERAL = {"0'": "H3'", "H1'": "H4'"}

# Repaired third example: the closest adjoint pair (see corrected_example3).
EXAMPLE3_ALPHA = {"H3'": "0'", "H4'": "H1'", "H2'": "H1'"}


@lru_cache(maxsize=None)
def example1() -> GaloisConnection:
    L = SG()
    return from_label_tables(L, L, EXAMPLE1_ALPHA, EXAMPLE1_BETA, "example-1")


@lru_cache(maxsize=None)
def example2() -> GaloisConnection:
    L = SG()
    return from_label_tables(L, L, EXAMPLE2_ALPHA, EXAMPLE2_BETA, "example-2")


def example3_literal() -> GaloisConnection:
    """The third example exactly as tabulated; raises NotMonotone."""
    L = SGprime()
    return from_label_tables(L, L, EXAMPLE3_ALPHA_LITERAL, EXAMPLE3_BETA_LITERAL, "example-3-literal")


@lru_cache(maxsize=None)
def example3() -> GaloisConnection:
    """Third example with alpha made join-preserving and beta its upper adjoint."""
    from lattika.galois import upper_adjoint

    L = SGprime()
    alpha = MonotoneMap.from_labels(L, L, EXAMPLE3_ALPHA)
    return connect(alpha, upper_adjoint(alpha), "example-3")

"""A deterministic corpus of small lattices and Galois connections.

Used by the property suite and the benchmarks. Every generator is seeded so
repeated calls return structurally identical objects in the same order.
"""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import product as iproduct

import numpy as np

from lattika import fixtures
from lattika.abelian import AbelianGroup, isomorphisms, subgroups
from lattika.errors import GaloisError
from lattika.galois import (
    GaloisConnection,
    MonotoneMap,
    adjunction_failure,
    connect,
    identity_connection,
    upper_adjoint,
)
from lattika.lattice import Lattice, chain, from_covers, from_order, interval, is_modular

SEED = 20240611


def product(L: Lattice, M: Lattice) -> Lattice:
    """Cartesian product with the componentwise order; element (i, j) has index i*|M|+j."""
    order = np.kron(L.order.astype(np.uint8), M.order.astype(np.uint8)).astype(bool)
    labels = [f"({a},{b})" for a, b in iproduct(L.labels, M.labels)]
    return from_order(order, labels)


def boolean(k: int) -> Lattice:
    out = chain(2, "b")
    for _ in range(k - 1):
        out = product(out, chain(2, "b"))
    return out


def m_lattice(k: int) -> Lattice:
    """0 < a_1, ..., a_k < 1 (M3 for k = 3)."""
    labels = ["0"] + [f"a{i}" for i in range(1, k + 1)] + ["1"]
    covers = [(0, i) for i in range(1, k + 1)] + [(i, k + 1) for i in range(1, k + 1)]
    return from_covers(k + 2, covers, labels)


def pentagon() -> Lattice:
    # 0 < a < b < 1, 0 < c < 1
    return from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], ["0", "a", "b", "c", "1"])


def hexagon() -> Lattice:
    return from_covers(6, [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)], ["0", "a", "b", "c", "d", "1"])


def subgroup_lattice(spec: str) -> Lattice:
    return subgroups(AbelianGroup.parse(spec)).lattice


@lru_cache(maxsize=None)
def lattices() -> dict[str, Lattice]:
    """Named corpus lattices, all with at most 12 elements."""
    out = {f"chain{k}": chain(k) for k in range(2, 7)}
    out["bool2"] = boolean(2)
    out["bool3"] = boolean(3)
    out["M3"] = m_lattice(3)
    out["M4"] = m_lattice(4)
    out["N5"] = pentagon()
    out["hexagon"] = hexagon()
    out["SG"] = fixtures.SG()
    out["SGprime"] = fixtures.SGprime()
    for spec in ("8", "12", "2x2", "3x3", "2x6", "36", "3x4", "2x4", "30"):
        out[f"Z{spec}"] = subgroup_lattice(spec)
    out["chain2xchain3"] = product(chain(2), chain(3))
    out["chain3xchain3"] = product(chain(3), chain(3))
    out["M3xchain2"] = product(m_lattice(3), chain(2))
    return out


def modular_lattices() -> dict[str, Lattice]:
    return {k: L for k, L in lattices().items() if is_modular(L)}


def _join_irreducibles(L: Lattice) -> list[int]:
    out = []
    for x in L:
        if x == L.bottom:
            continue
        below = [y for y in L if L.lt(y, x)]
        if L.join_all(below) != x:
            out.append(x)
    return out


def random_join_map(A: Lattice, B: Lattice, rng: random.Random, surjective_top: bool = False):
    """A random join-preserving map A -> B, or None if the attempt fails.

    Images are drawn for join-irreducibles and extended by joins; the result
    is kept only when it is monotone and has an upper adjoint.
    """
    img = {}
    for j in _join_irreducibles(A):
        floor = B.join_all(img[k] for k in img if A.leq(k, j))
        choices = [b for b in B if B.leq(floor, b)]
        img[j] = rng.choice(choices)
    vals = []
    for a in A:
        vals.append(B.join_all(img[j] for j in img if A.leq(j, a)))
    if surjective_top and vals[A.top] != B.top:
        return None
    try:
        alpha = MonotoneMap(A, B, tuple(vals))
        beta = upper_adjoint(alpha)
    except GaloisError:
        return None
    if adjunction_failure(alpha, beta) is not None:
        return None
    return connect(alpha, beta)


def random_connections(count: int, seed: int = SEED, max_size: int = 10, hypotheses: bool = False,
                       tag: str = "random") -> list[GaloisConnection]:
    """``count`` distinct adjoint pairs between modular corpus lattices.

    With ``hypotheses`` only pairs where alpha keeps the top and beta keeps
    finite joins are returned.
    """
    rng = random.Random(seed)
    pool = [(k, L) for k, L in sorted(modular_lattices().items()) if L.n <= max_size]
    seen = set()
    out = []
    attempts = 0
    while len(out) < count and attempts < 200 * count:
        attempts += 1
        (ka, A), (kb, B) = rng.choice(pool), rng.choice(pool)
        gc = random_join_map(A, B, rng, surjective_top=hypotheses or rng.random() < 0.7)
        if gc is None or (hypotheses and gc.base_missing()):
            continue
        key = (ka, kb, gc.alpha.values)
        if key in seen:
            continue
        seen.add(key)
        out.append(GaloisConnection(gc.alpha, gc.beta, f"{tag}:{ka}->{kb}:{len(out)}"))
    return out


def quotient_connection(L: Lattice, c: int) -> GaloisConnection:
    """alpha(a) = a v c onto the interval [c, 1]; beta is the inclusion."""
    I = interval(L, c, L.top)
    sub = I.as_lattice()
    members = sorted(I.members)
    pos = {m: i for i, m in enumerate(members)}
    alpha = MonotoneMap(L, sub, tuple(pos[L.join(a, c)] for a in L))
    beta = MonotoneMap(sub, L, tuple(members))
    return connect(alpha, beta, f"quotient:{L.label(c)}")


def projection_connection(L: Lattice, M: Lattice) -> GaloisConnection:
    """L x M -> L, (a, b) -> a, with right adjoint a -> (a, 1)."""
    P = product(L, M)
    alpha = MonotoneMap(P, L, tuple(i // M.n for i in P))
    beta = MonotoneMap(L, P, tuple(a * M.n + M.top for a in L))
    return connect(alpha, beta, "projection")


def automorphism_connections(L: Lattice, limit: int = 6) -> list[GaloisConnection]:
    out = []
    for k, perm in enumerate(isomorphisms(L, L)):
        if k >= limit:
            break
        inv = [0] * L.n
        for i, p in enumerate(perm):
            inv[p] = i
        out.append(connect(MonotoneMap(L, L, tuple(perm)), MonotoneMap(L, L, tuple(inv)), f"automorphism:{k}"))
    return out


def compose(first: GaloisConnection, second: GaloisConnection) -> GaloisConnection:
    """The connection A -> C obtained from A -> B followed by B -> C."""
    a = first.alpha
    b = second.alpha
    alpha = MonotoneMap(first.A, second.B, tuple(b[a[x]] for x in first.A))
    beta = MonotoneMap(second.B, first.A, tuple(first.beta[second.beta[z]] for z in second.B))
    return connect(alpha, beta, f"{first.name}*{second.name}")


def trace_connections() -> list[GaloisConnection]:
    from lattika.modgal import FiniteModule, build_trace_connection

    cases = [(4, "R", "2x4"), (6, "R", "6"), (4, "R", "2"), (4, "R", "4"), (4, "2", "2x2"), (6, "R", "2x3"), (9, "R", "3x9")]
    out = []
    for ring, m, n in cases:
        tc = build_trace_connection(FiniteModule.parse(ring, m), FiniteModule.parse(ring, n))
        out.append(GaloisConnection(tc.connection.alpha, tc.connection.beta, f"trace:Z{ring}:{m}:{n}"))
    return out


@lru_cache(maxsize=None)
def connections() -> tuple[GaloisConnection, ...]:
    """The full property-suite corpus, in a fixed order."""
    out = []
    lats = lattices()
    for name, L in sorted(lats.items()):
        gc = identity_connection(L)
        out.append(GaloisConnection(gc.alpha, gc.beta, f"identity:{name}"))
    out += [fixtures.example1(), fixtures.example2(), fixtures.example3()]
    for name, L in sorted(modular_lattices().items()):
        for c in L:
            if c != L.top:
                q = quotient_connection(L, c)
                out.append(GaloisConnection(q.alpha, q.beta, f"{q.name}@{name}"))
    for name in ("SG", "SGprime", "M3", "bool2", "chain3xchain3"):
        for gc in automorphism_connections(lats[name], limit=4):
            out.append(GaloisConnection(gc.alpha, gc.beta, f"{gc.name}@{name}"))
    for a, b in (("chain2", "chain3"), ("M3", "chain2"), ("bool2", "chain2"), ("chain3", "M3")):
        gc = projection_connection(lats[a], lats[b])
        out.append(GaloisConnection(gc.alpha, gc.beta, f"projection:{a}x{b}"))
    e1 = fixtures.example1()
    e3 = fixtures.example3()
    out.append(compose(e1, e1))
    out.append(compose(e3, e3))
    out.append(compose(fixtures.example2(), e1))
    out += trace_connections()
    out += random_connections(120)
    out += random_connections(100, seed=SEED + 1, hypotheses=True, tag="filtered")
    return tuple(out)

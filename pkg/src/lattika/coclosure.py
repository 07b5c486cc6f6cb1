"""Single-lattice predicates: complements, cosmall elements, coclosures,
supplements, and the supplemented/lifting classifiers.

Every quantifier is evaluated exhaustively over the lattice. "b is cosmall
in [a, 1]" is read from the cached ``Lattice.cosmall`` matrix, which holds
``cosmall[a, b]``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from lattika.errors import NotComparable
from lattika.lattice import Lattice, is_modular, pick_witness
from lattika.verdict import Verdict


def is_cosmall(L: Lattice, a: int, a_prime: int) -> bool:
    """True iff ``a_prime`` is cosmall in ``[a, 1]``."""
    if not L.leq(a, a_prime):
        raise NotComparable(L.label(a), L.label(a_prime))
    return bool(L.cosmall[a, a_prime])


def cosmall_witness(L: Lattice, a: int, a_prime: int) -> int | None:
    """An x with ``a' v x = 1`` but ``a v x != 1``; None when a' is cosmall in [a, 1]."""
    if not L.leq(a, a_prime):
        raise NotComparable(L.label(a), L.label(a_prime))
    j = L.join_table
    bad = np.flatnonzero((j[a_prime] == L.top) & (j[a] != L.top))
    return pick_witness(L, bad.tolist())


def is_small(L: Lattice, a: int) -> bool:
    """a is cosmall in [0, 1], i.e. ``a v x = 1`` forces ``x = 1``."""
    return bool(L.cosmall[L.bottom, a])


def is_coclosed(L: Lattice, a_prime: int) -> bool:
    below = L.cosmall[:, a_prime].copy()
    below[a_prime] = False
    return not below.any()


def coclosed_set(L: Lattice) -> frozenset[int]:
    cs = L.cosmall & ~np.eye(L.n, dtype=bool)
    return frozenset(np.flatnonzero(~cs.any(axis=0)).tolist())


def coclosures(L: Lattice, a: int) -> frozenset[int]:
    """All coclosed ``a' <= a`` with a cosmall in ``[a', 1]``; possibly empty."""
    coc = coclosed_set(L)
    return frozenset(x for x in np.flatnonzero(L.cosmall[:, a]).tolist() if x in coc)


def coclosure_map(L: Lattice) -> dict[int, frozenset[int]]:
    coc = coclosed_set(L)
    return {a: frozenset(x for x in np.flatnonzero(L.cosmall[:, a]).tolist() if x in coc) for a in L}


def unique_coclosure(L: Lattice, a: int) -> int | None:
    cl = coclosures(L, a)
    return next(iter(cl)) if len(cl) == 1 else None


def complements(L: Lattice, a: int) -> frozenset[int]:
    """All a' with ``a ^ a' = 0`` and ``a v a' = 1``."""
    hit = (L.meet_table[a] == L.bottom) & (L.join_table[a] == L.top)
    return frozenset(np.flatnonzero(hit).tolist())


def is_complement(L: Lattice, a: int) -> bool:
    return bool(complements(L, a))


def complement_witness(L: Lattice, a: int) -> int | None:
    return pick_witness(L, complements(L, a))


def complement_set(L: Lattice) -> frozenset[int]:
    hit = ((L.meet_table == L.bottom) & (L.join_table == L.top)).any(axis=1)
    return frozenset(np.flatnonzero(hit).tolist())


def supplement_failure(L: Lattice, a: int, a_prime: int) -> int | None:
    """Witness x < a with ``x v a' = 1``; None when no such x exists."""
    below = L.order[:, a].copy()
    below[a] = False
    hit = below & (L.join_table[:, a_prime] == L.top)
    return pick_witness(L, np.flatnonzero(hit).tolist())


def is_supplement_of(L: Lattice, a: int, a_prime: int) -> bool:
    """a is minimal with ``a v a' = 1``."""
    if L.join(a, a_prime) != L.top:
        return False
    return supplement_failure(L, a, a_prime) is None


def supplements_of(L: Lattice, a_prime: int) -> frozenset[int]:
    """All supplements of ``a_prime``: the minimal elements x with ``x v a' = 1``."""
    joins_top = L.join_table[:, a_prime] == L.top
    out = []
    for x in np.flatnonzero(joins_top):
        below = L.order[:, x].copy()
        below[x] = False
        if not (below & joins_top).any():
            out.append(int(x))
    return frozenset(out)


def supplement_set(L: Lattice) -> frozenset[int]:
    out = set()
    for b in L:
        out |= supplements_of(L, b)
    return frozenset(out)


def is_supplement(L: Lattice, a: int) -> bool:
    return a in supplement_set(L)


def is_supplemented(L: Lattice) -> bool:
    return all(supplements_of(L, a) for a in L)


def _shadow_exists(L: Lattice, pool: frozenset[int]) -> list[int]:
    # elements a for which no x in pool has a cosmall in [x, 1]
    cs = L.cosmall
    return [a for a in L if not any(cs[x, a] for x in pool)]


def is_amply_supplemented(L: Lattice) -> bool:
    return not _shadow_exists(L, supplement_set(L))


def is_lifting(L: Lattice) -> bool:
    return not _shadow_exists(L, complement_set(L))


def is_ucc(L: Lattice) -> bool:
    return all(len(v) == 1 for v in coclosure_map(L).values())


@dataclass(frozen=True)
class LatticeClassification:
    supplemented: bool
    amply_supplemented: bool
    ucc: bool
    lifting: bool
    modular: bool
    coclosed_set: frozenset[int]
    complement_set: frozenset[int]
    supplement_set: frozenset[int]
    coclosure_map: dict

    def to_json(self, L: Lattice) -> dict:
        return {
            "modular": self.modular,
            "supplemented": self.supplemented,
            "amply_supplemented": self.amply_supplemented,
            "ucc": self.ucc,
            "lifting": self.lifting,
            "coclosed": L.names(self.coclosed_set),
            "complements": L.names(self.complement_set),
            "supplements": L.names(self.supplement_set),
            "coclosures": {L.label(a): L.names(v) for a, v in sorted(self.coclosure_map.items())},
        }


def classify(L: Lattice) -> LatticeClassification:
    modular = is_modular(L)
    comp = complement_set(L)
    supp = supplement_set(L)
    cmap = coclosure_map(L)
    return LatticeClassification(
        supplemented=all(supplements_of(L, a) for a in L),
        amply_supplemented=not _shadow_exists(L, supp),
        ucc=all(len(v) == 1 for v in cmap.values()),
        lifting=not _shadow_exists(L, comp),
        modular=modular,
        coclosed_set=coclosed_set(L),
        complement_set=comp,
        supplement_set=supp,
        coclosure_map=cmap,
    )


def verify_lemmas(L: Lattice) -> list[Verdict]:
    """Check the single-lattice lemmas on ``L`` exhaustively.

    Covers cosmall transitivity, complements being coclosed, supplements
    being coclosed (and conversely when supplemented), existence and
    monotonicity of coclosures. Clauses that need modularity or ample
    supplementation report ``hypotheses_met=False`` when those fail.
    """
    cls = classify(L)
    cs = L.cosmall
    out = []

    bad = None
    for a in L:
        for b in L.up(a):
            for c in L.up(b):
                if bool(cs[a, c]) != (bool(cs[a, b]) and bool(cs[b, c])):
                    bad = bad or {"a": L.label(a), "b": L.label(b), "c": L.label(c)}
    out.append(Verdict("cosmall-transitivity", bad is None, counterexample=bad))

    missing = () if cls.modular else ("modular",)
    bad = pick_witness(L, cls.complement_set - cls.coclosed_set)
    out.append(Verdict.clause("complements-coclosed", bad is None, missing, L, bad))

    bad = pick_witness(L, cls.supplement_set - cls.coclosed_set)
    out.append(Verdict.clause("supplements-coclosed", bad is None, missing, L, bad))

    m2 = missing + (() if cls.supplemented else ("supplemented",))
    bad = pick_witness(L, cls.coclosed_set - cls.supplement_set)
    out.append(Verdict.clause("coclosed-are-supplements", bad is None, m2, L, bad))

    m3 = missing + (() if cls.amply_supplemented else ("amply-supplemented",))
    bad = pick_witness(L, [a for a, v in cls.coclosure_map.items() if not v])
    out.append(Verdict.clause("coclosure-exists", bad is None, m3, L, bad))

    m4 = m3 + (() if cls.ucc else ("ucc",))
    bad = None
    if cls.ucc:
        bar = {a: next(iter(v)) for a, v in cls.coclosure_map.items()}
        for a1 in L:
            for a2 in L.up(a1):
                if not L.leq(bar[a1], bar[a2]) and bad is None:
                    bad = {"a1": L.label(a1), "a2": L.label(a2)}
    out.append(Verdict("coclosure-monotone", bad is None, not m4, m4, bad))
    return out

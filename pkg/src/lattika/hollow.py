"""Meet-independent subsets and hollow (dual Goldie) dimension."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from lattika import kernels
from lattika.coclosure import is_small
from lattika.errors import ContainsTop, HypothesesNotMet, NotModular
from lattika.galois import (
    ALL_GALOIS,
    CODOMAIN_MODULAR,
    COSMALL,
    DOMAIN_MODULAR,
    GaloisConnection,
)
from lattika.lattice import Lattice, is_modular
from lattika.verdict import Verdict


def _checked(L: Lattice, ys: Iterable[int]) -> list[int]:
    ys = list(ys)
    if L.top in ys:
        raise ContainsTop(f"{L.label(L.top)!r} cannot belong to a meet-independent set")
    return ys


def is_meet_independent(L: Lattice, Y: Iterable[int]) -> bool:
    """Every sub-meet of Y joins each remaining member of Y to the top."""
    ys = sorted(set(_checked(L, Y)))
    return bool(kernels.meet_independent(L.meet_table, L.join_table, L.top, ys))


def is_meet_independent_chain_form(L: Lattice, Y: Sequence[int]) -> bool:
    """``(y1 ^ ... ^ y_{k-1}) v y_k = 1`` for every k, in the given order.

    On modular lattices this agrees with :func:`is_meet_independent` for
    any ordering of a set of distinct elements.
    """
    ys = _checked(L, Y)
    if len(set(ys)) != len(ys):
        return False
    acc = L.top
    for k, y in enumerate(ys):
        if k and L.join(acc, y) != L.top:
            return False
        acc = L.meet(acc, y)
    return True


def independent_sets(L: Lattice, limit: int | None = None) -> list[list[tuple[int, ...]]]:
    """Meet-independent sets grouped by size, each level in lexicographic order.

    Level k only extends sets whose every k-subset is independent, since
    any superset of a dependent set is dependent.
    """
    proper = [x for x in L if x != L.top]
    levels = [[()], [(x,) for x in proper]]
    while levels[-1] and (limit is None or len(levels) <= limit):
        prev = set(levels[-1])
        nxt = []
        for s in levels[-1]:
            for x in proper:
                if x <= s[-1]:
                    continue
                cand = s + (x,)
                if all(cand[:i] + cand[i + 1 :] in prev for i in range(len(cand) - 1)):
                    if kernels.meet_independent(L.meet_table, L.join_table, L.top, list(cand)):
                        nxt.append(cand)
        levels.append(nxt)
    if not levels[-1]:
        levels.pop()
    return levels


@dataclass(frozen=True)
class HollowReport:
    dimension: int
    witness: tuple[int, ...]
    cosmall_meet_witness: tuple[int, ...] | None

    def to_json(self, L: Lattice) -> dict:
        return {
            "dimension": self.dimension,
            "witness": [L.label(x) for x in self.witness],
            "cosmall_meet_witness": None
            if self.cosmall_meet_witness is None
            else [L.label(x) for x in self.cosmall_meet_witness],
        }


def hollow_dimension(L: Lattice) -> HollowReport:
    """Exact hollow dimension of a bounded modular lattice.

    The witness is the lexicographically smallest maximum independent set;
    ``cosmall_meet_witness`` is the smallest maximum set whose total meet is
    small (cosmall in [0, 1]), when one exists.
    """
    if not is_modular(L):
        raise NotModular("hollow dimension is only defined here for modular lattices")
    levels = independent_sets(L)
    top_level = levels[-1]
    small = next((s for s in top_level if is_small(L, L.meet_all(s))), None)
    return HollowReport(len(levels) - 1, top_level[0], small)


def verify_dimension_transfer(gc: GaloisConnection, strict: bool = True) -> list[Verdict]:
    A, B = gc.A, gc.B
    missing = gc.base_missing()
    if not is_modular(A):
        missing.append(DOMAIN_MODULAR)
    if not is_modular(B):
        missing.append(CODOMAIN_MODULAR)
    if not gc.cosmall:
        missing.append(COSMALL)
    if strict and missing:
        raise HypothesesNotMet(missing)
    m = tuple(missing)
    if DOMAIN_MODULAR in m or CODOMAIN_MODULAR in m:
        return [Verdict("hdim-inequality", False, False, m)]

    ha, hb = hollow_dimension(A), hollow_dimension(B)
    dims = {"hdim_domain": ha.dimension, "hdim_codomain": hb.dimension}
    out = [Verdict("hdim-inequality", ha.dimension <= hb.dimension, not m, m, dims)]

    m2 = m + (() if gc.all_domain_galois else (ALL_GALOIS,))
    out.append(Verdict("hdim-equality", ha.dimension == hb.dimension, not m2, m2, dims))

    bad = None
    for level in independent_sets(A)[1:]:
        for s in level:
            img = {gc.alpha[a] for a in s}
            if len(img) != len(s) or B.top in img or not is_meet_independent(B, img):
                bad = {"set": [A.label(a) for a in s]}
                break
        if bad:
            break
    out.append(Verdict("independent-image", bad is None, not m, m, bad))
    return out
